"""Exact arithmetic in the braid group on n strands.

Elements are held in left canonical form: a power of the fundamental half
twist followed by a left-weighted sequence of permutation-braid factors.
The form is unique, so equality of group elements is structural equality of
``CanonicalForm`` values, and it is the only representation the rest of the
package hashes, serializes, or compares.

Conventions (fixed once, used everywhere):

- A generator letter with 1-based ``index`` i acts on a 0-indexed position
  array by swapping positions i-1 and i. The permutation of a word maps start
  position to end position; words compose left to right.
- A factor permutation ``p`` admits the generator of index i+1 as a left
  divisor exactly when i is a descent of ``p``, and as a right divisor exactly
  when i is a descent of the inverse of ``p``.
- Adjacent factors (A, B) are left weighted when every descent of B is a
  descent of the inverse of A. Factors are never the identity and never the
  half-twist permutation; whole half twists live in the ``inf`` exponent.

Strand counts from 2 to 1024 are supported; factor tables fit 16-bit entries.
"""

from __future__ import annotations

import dataclasses
import functools
import re
from typing import NamedTuple, Sequence

from . import permutations as perms
from .errors import InvalidParameterError
from .permutations import PermTable

MAX_STRANDS = 1024


class GeneratorLetter(NamedTuple):
    """A signed Artin generator: ``index`` in [1, n-1], ``sign`` +1 or -1."""

    index: int
    sign: int


def _check_strand_count(n: int) -> None:
    if not isinstance(n, int) or n < 2 or n > MAX_STRANDS:
        raise InvalidParameterError(f"strand count must be an int in [2, {MAX_STRANDS}], got {n!r}")


@dataclasses.dataclass(frozen=True)
class BraidWord:
    """A word over signed generators of the braid group on ``n`` strands.

    The empty word is the identity. Words are inputs only; all group-level
    questions go through :func:`normalize`.
    """

    n: int
    letters: tuple[GeneratorLetter, ...] = ()

    def __post_init__(self):
        _check_strand_count(self.n)
        clean = []
        for letter in self.letters:
            index, sign = letter
            if not 1 <= index <= self.n - 1:
                raise InvalidParameterError(
                    f"generator index {index} out of range for n={self.n}"
                )
            if sign not in (1, -1):
                raise InvalidParameterError(f"letter sign must be +1 or -1, got {sign!r}")
            clean.append(GeneratorLetter(index, sign))
        object.__setattr__(self, "letters", tuple(clean))

    def __len__(self) -> int:
        return len(self.letters)

    @classmethod
    def from_text(cls, n: int, text: str) -> "BraidWord":
        """Parse the word notation: tokens ``s<i>`` (positive) and ``S<i>``
        (inverse) separated by spaces or dots, e.g. ``"s1 s2 S1"``."""
        letters = []
        for token in re.split(r"[\s.]+", text.strip()):
            if not token:
                continue
            m = re.fullmatch(r"([sS])(\d+)", token)
            if m is None:
                raise InvalidParameterError(f"bad word token {token!r}")
            letters.append(GeneratorLetter(int(m.group(2)), 1 if m.group(1) == "s" else -1))
        return cls(n, tuple(letters))

    def to_text(self) -> str:
        return " ".join(f"{'s' if sign > 0 else 'S'}{index}" for index, sign in self.letters)

    def __repr__(self):
        return f"BraidWord({self.n}, {self.to_text()!r})"


def word(n: int, text: str) -> BraidWord:
    """Shorthand for :meth:`BraidWord.from_text`."""
    return BraidWord.from_text(n, text)


def is_left_weighted_pair(a: Sequence[int], b: Sequence[int]) -> bool:
    """Whether adjacent factors (a, b) satisfy the descent inclusion."""
    return perms.descent_mask(b) & ~perms.inverse_descent_mask(a) == 0


def validate_canonical_form(n: int, inf: int, factors: Sequence[Sequence[int]]) -> None:
    """Raise InvalidParameterError unless (n, inf, factors) is a left canonical form."""
    _check_strand_count(n)
    if not isinstance(inf, int):
        raise InvalidParameterError(f"inf must be an int, got {inf!r}")
    full = (1 << n) - 1
    prev_inv_mask = -1
    for f in factors:
        if len(f) != n:
            raise InvalidParameterError(f"factor {f!r} is not a permutation of size {n}")
        seen = 0
        pos = [0] * n
        for p, v in enumerate(f):
            if not isinstance(v, int) or not 0 <= v < n:
                raise InvalidParameterError(f"factor {f!r} is not a permutation of size {n}")
            seen |= 1 << v
            pos[v] = p
        if seen != full:
            raise InvalidParameterError(f"factor {f!r} is not a permutation of size {n}")
        desc = 0
        inv_desc = 0
        for i in range(n - 1):
            if f[i] > f[i + 1]:
                desc |= 1 << i
            if pos[i] > pos[i + 1]:
                inv_desc |= 1 << i
        if desc == 0:
            raise InvalidParameterError("identity permutation may not appear as a factor")
        if desc == (1 << (n - 1)) - 1 and all(f[i] == n - 1 - i for i in range(n)):
            raise InvalidParameterError("half-twist permutation must be absorbed into inf")
        if desc & ~prev_inv_mask:
            raise InvalidParameterError("adjacent factors are not left weighted")
        prev_inv_mask = inv_desc


@dataclasses.dataclass(frozen=True)
class CanonicalForm:
    """A braid in left canonical form: half-twist power ``inf`` and factor tables.

    Instances are immutable and validated on construction; any two values
    representing the same group element are equal as dataclasses.
    """

    n: int
    inf: int
    factors: tuple[PermTable, ...] = ()

    def __post_init__(self):
        validate_canonical_form(self.n, self.inf, self.factors)

    def __mul__(self, other: "CanonicalForm") -> "CanonicalForm":
        return multiply(self, other)

    def __pow__(self, e: int) -> "CanonicalForm":
        if e < 0:
            return power(inverse(self), -e)
        return power(self, e)

    def __invert__(self) -> "CanonicalForm":
        return inverse(self)

    def __repr__(self):
        return f"CanonicalForm(n={self.n}, inf={self.inf}, factors={list(self.factors)!r})"


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------

def identity(n: int) -> CanonicalForm:
    """The identity braid, the neutral element for multiply."""
    return CanonicalForm(n, 0, ())


def delta(n: int) -> CanonicalForm:
    """The fundamental braid (positive half twist) as a canonical form."""
    return CanonicalForm(n, 1, ())


def delta_word(n: int) -> BraidWord:
    """The defining positive word of the fundamental braid:
    (s1 ... s_{n-1})(s1 ... s_{n-2}) ... (s1)."""
    _check_strand_count(n)
    letters = [
        GeneratorLetter(i, 1)
        for block_top in range(n - 1, 0, -1)
        for i in range(1, block_top + 1)
    ]
    return BraidWord(n, tuple(letters))


def generator(n: int, index: int, sign: int = 1) -> CanonicalForm:
    """The canonical form of a single signed generator."""
    return normalize(BraidWord(n, (GeneratorLetter(index, sign),)))


# ---------------------------------------------------------------------------
# Permutations of words and factors
# ---------------------------------------------------------------------------

def descent_set(table: Sequence[int]) -> frozenset[int]:
    """Descent set of a permutation table: indices i with table[i] > table[i+1]."""
    return perms.descent_set(table)


def braidword_to_permutation(w: BraidWord) -> PermTable:
    """The permutation induced on strand positions, start to end.

    Signs are forgotten: each letter swaps the two positions it touches.
    """
    pos = list(range(w.n))
    for index, _sign in w.letters:
        pos[index - 1], pos[index] = pos[index], pos[index - 1]
    return perms.inverse(pos)


def permutation_to_braidword(table: Sequence[int]) -> BraidWord:
    """A positive word realizing ``table`` as a permutation braid.

    Repeatedly emits the smallest descent, so the word is the lexicographically
    least positive representative; its length is the inversion count.
    """
    n = len(table)
    if not perms.is_permutation(table):
        raise InvalidParameterError(f"{table!r} is not a permutation")
    work = list(table)
    letters = []
    i = 0
    while i < n - 1:
        if work[i] > work[i + 1]:
            letters.append(GeneratorLetter(i + 1, 1))
            work[i], work[i + 1] = work[i + 1], work[i]
            i = i - 1 if i else 0
        else:
            i += 1
    return BraidWord(n, tuple(letters))


# ---------------------------------------------------------------------------
# The left-weighting engine
# ---------------------------------------------------------------------------

# Pair rebalancing is the innermost operation of every product; identical
# factor pairs recur constantly, so results are memoized. None means the pair
# was already left weighted.
_PAIR_MEMO: dict[tuple[PermTable, PermTable], "tuple[PermTable, PermTable] | None"] = {}
_PAIR_MEMO_LIMIT = 1 << 17
_MISS = object()


def _rebalance_pair(a: PermTable, b: PermTable) -> "tuple[PermTable, PermTable] | None":
    """Move generators from the front of b to the back of a until the pair is
    left weighted, smallest eligible index first. Returns the new pair, or
    None when nothing moved."""
    cached = _PAIR_MEMO.get((a, b), _MISS)
    if cached is not _MISS:
        return cached  # type: ignore[return-value]
    n = len(a)
    la = list(a)
    lb = list(b)
    apos = [0] * n
    for pos, v in enumerate(la):
        apos[v] = pos
    changed = False
    i = 0
    last = n - 1
    while i < last:
        # Eligible: i descends in b but not in a^{-1}.
        if lb[i] > lb[i + 1] and apos[i] < apos[i + 1]:
            lb[i], lb[i + 1] = lb[i + 1], lb[i]
            p, q = apos[i], apos[i + 1]
            la[p], la[q] = i + 1, i
            apos[i], apos[i + 1] = q, p
            changed = True
            # A move can newly expose index i-1 only; resume one step back.
            if i:
                i -= 1
        else:
            i += 1
    result = (tuple(la), tuple(lb)) if changed else None
    if len(_PAIR_MEMO) >= _PAIR_MEMO_LIMIT:
        _PAIR_MEMO.clear()
    _PAIR_MEMO[(a, b)] = result
    return result


def _left_weight_fixpoint(n: int, factors: list[PermTable]) -> tuple[int, tuple[PermTable, ...]]:
    """Rebalance an arbitrary factor sequence to the unique left-weighted form
    by whole left-to-right passes. Returns (half twists absorbed, factors)."""
    id_table = perms.identity(n)
    twist_table = perms.reversal(n)
    absorbed = 0
    while True:
        changed = False
        for j in range(len(factors) - 1):
            res = _rebalance_pair(factors[j], factors[j + 1])
            if res is not None:
                factors[j], factors[j + 1] = res
                changed = True
        kept = [f for f in factors if f != id_table]
        if len(kept) != len(factors):
            changed = True
        while kept and kept[0] == twist_table:
            kept.pop(0)
            absorbed += 1
            changed = True
        factors = kept
        if not changed:
            return absorbed, tuple(factors)


def _strip(n: int, factors: list[PermTable]) -> tuple[int, tuple[PermTable, ...]]:
    """Drop leading half twists and trailing identities from a pairwise
    left-weighted sequence (the only places they can sit)."""
    id_table = perms.identity(n)
    twist_table = perms.reversal(n)
    lo, hi = 0, len(factors)
    while lo < hi and factors[lo] == twist_table:
        lo += 1
    while lo < hi and factors[hi - 1] == id_table:
        hi -= 1
    return lo, tuple(factors[lo:hi])


def _weld(n: int, factors: list[PermTable], junction: int) -> tuple[int, tuple[PermTable, ...]]:
    """Left-weight the concatenation of two sequences that are each already
    left weighted, joined at ``junction``.

    One forward sweep from the junction, combing backward after each change,
    restores the invariant: a pair that needs no move leaves everything to its
    right untouched.
    """
    for i in range(max(junction - 1, 0), len(factors) - 1):
        res = _rebalance_pair(factors[i], factors[i + 1])
        if res is None:
            break
        factors[i], factors[i + 1] = res
        for k in range(i - 1, -1, -1):
            res = _rebalance_pair(factors[k], factors[k + 1])
            if res is None:
                break
            factors[k], factors[k + 1] = res
    return _strip(n, factors)


def _assemble(n: int, inf: int, factors: list[PermTable]) -> CanonicalForm:
    extra, weighted = _left_weight_fixpoint(n, factors)
    return CanonicalForm(n, inf + extra, weighted)


def normalize(w: BraidWord) -> CanonicalForm:
    """The unique left canonical form of a word.

    Positive letters become their transposition factor; a negative letter
    becomes a negative half twist followed by the complement factor. Half
    twists migrate to the front through the index-flip automorphism, then the
    factor sequence is rebalanced to the left-weighted fixpoint.
    """
    n = w.n
    factors: list[PermTable] = []
    shifts: list[int] = []
    for index, sign in w.letters:
        t = perms.adjacent_transposition(n, index)
        if sign > 0:
            factors.append(t)
            shifts.append(0)
        else:
            factors.append(perms.left_complement(t))
            shifts.append(-1)
    acc = 0
    for j in range(len(factors) - 1, -1, -1):
        if acc & 1:
            factors[j] = perms.flip(factors[j])
        acc += shifts[j]
    return _assemble(n, acc, factors)


def multiply(a: CanonicalForm, b: CanonicalForm) -> CanonicalForm:
    """Canonical form of the concatenation ``a`` then ``b``."""
    if a.n != b.n:
        raise InvalidParameterError(f"strand counts differ: {a.n} vs {b.n}")
    inf = a.inf + b.inf
    odd = b.inf & 1
    if not a.factors:
        return CanonicalForm(a.n, inf, b.factors)
    if not b.factors:
        twisted = tuple(perms.flip(f) for f in a.factors) if odd else a.factors
        return CanonicalForm(a.n, inf, twisted)
    factors = [perms.flip(f) for f in a.factors] if odd else list(a.factors)
    junction = len(factors)
    factors.extend(b.factors)
    absorbed, weighted = _weld(a.n, factors, junction)
    return CanonicalForm(a.n, inf + absorbed, weighted)


def inverse(x: CanonicalForm) -> CanonicalForm:
    """The group inverse."""
    n = x.n
    factors = [perms.left_complement(f) for f in reversed(x.factors)]
    acc = -x.inf
    for j in range(len(factors) - 1, -1, -1):
        if acc & 1:
            factors[j] = perms.flip(factors[j])
        acc -= 1
    return _assemble(n, acc, factors)


@functools.lru_cache(maxsize=4096)
def power(x: CanonicalForm, e: int) -> CanonicalForm:
    """The e-fold product, e >= 0. Use :func:`inverse` first for negative powers.

    Cached: protocol rounds raise the same braid to the same small exponent on
    both sides of the exchange.
    """
    if not isinstance(e, int) or e < 0:
        raise InvalidParameterError(f"exponent must be a non-negative int, got {e!r}")
    acc = identity(x.n)
    for _ in range(e):
        acc = multiply(acc, x)
    return acc


def equals(a: CanonicalForm, b: CanonicalForm) -> bool:
    """Group equality; canonical forms are unique so this is structural."""
    if a.n != b.n:
        raise InvalidParameterError(f"strand counts differ: {a.n} vs {b.n}")
    return a.inf == b.inf and a.factors == b.factors


def canonical_length(x: CanonicalForm) -> int:
    """The factor count of the canonical form, the standard size measure."""
    return len(x.factors)


def tau(x: CanonicalForm) -> CanonicalForm:
    """The index-flip automorphism, applied factorwise. Involutive, and the
    half twist commutes with any braid up to one application of it."""
    return CanonicalForm(x.n, x.inf, tuple(perms.flip(f) for f in x.factors))


def to_braidword(x: CanonicalForm) -> BraidWord:
    """Re-expand a canonical form into a word over signed generators."""
    letters: list[GeneratorLetter] = []
    if x.inf >= 0:
        letters.extend(delta_word(x.n).letters * x.inf)
    else:
        flipped = [
            GeneratorLetter(index, -1) for index, _ in reversed(delta_word(x.n).letters)
        ]
        letters.extend(flipped * (-x.inf))
    for f in x.factors:
        letters.extend(permutation_to_braidword(f).letters)
    return BraidWord(x.n, tuple(letters))
