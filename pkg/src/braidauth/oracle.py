"""Brute-force root solving at toy scale, and impersonation experiments.

The root search enumerates freely reduced words in a fixed order (shorter
first, then lexicographic with the positive letter before the negative at the
same index) and returns the first braid whose e-th power matches the target.
It is an oracle for desk-scale parameters, not an algorithm for real ones:
the candidate count grows as (2(n-1))^L, so every search carries an explicit
candidate budget and fails loudly when it runs out.

The impersonation experiments run full verifier sessions against a responder
that holds no secret key: a uniform-digest guesser, a replayer of an
eavesdropped session, and a root-recovery attacker that searches the strand
blocks for the secrets behind the public key and, when it finds them, plays
the protocol honestly. The last one is the point: it wins exactly when the
root search is feasible.
"""

from __future__ import annotations

import dataclasses
from typing import Callable, Iterator

from . import braid as braid_ops
from . import permutations as perms
from .braid import BraidWord, CanonicalForm, GeneratorLetter, equals, inverse, multiply, power
from .errors import InvalidParameterError, SearchExhausted
from .hashing import hash_braid
from .protocol import (
    Response,
    SchemeIKeyPair,
    SchemeIIKeyPair,
    SessionConfig,
    challenge1,
    challenge2,
    respond1,
    respond2,
    run_session,
    verify1,
    verify2,
)
from .rng import DeterministicRng
from .sampling import SamplerConfig, lower_generator_indices, upper_generator_indices

DEFAULT_SEARCH_BUDGET = 200_000


@dataclasses.dataclass(frozen=True)
class RootQuery:
    """Find x with x^e = y, searching words up to ``max_word_length`` letters."""

    y: CanonicalForm
    e: int
    max_word_length: int

    def __post_init__(self):
        if not isinstance(self.e, int) or self.e < 2:
            raise InvalidParameterError(f"root degree must be an int >= 2, got {self.e!r}")
        if not isinstance(self.max_word_length, int) or self.max_word_length < 0:
            raise InvalidParameterError(
                f"max_word_length must be >= 0, got {self.max_word_length!r}"
            )


def exponent_sum(w: BraidWord) -> int:
    """Sum of letter signs; invariant under the braid relations and free
    cancellation, so a homomorphism to the integers."""
    return sum(sign for _, sign in w.letters)


def canonical_exponent_sum(x: CanonicalForm) -> int:
    """The same homomorphism evaluated on a canonical form: the half twist
    contributes n(n-1)/2, each factor its inversion count."""
    n = x.n
    return x.inf * (n * (n - 1) // 2) + sum(perms.inversion_count(f) for f in x.factors)


def iter_reduced_words(
    n: int, max_len: int, indices: "range | list[int] | None" = None
) -> Iterator[tuple[GeneratorLetter, ...]]:
    """All freely reduced words of length <= max_len, shortest first, then
    lexicographic (positive sign before negative at equal index)."""
    pool = list(indices) if indices is not None else list(range(1, n))
    alphabet = [GeneratorLetter(i, s) for i in sorted(pool) for s in (1, -1)]

    def extend(prefix: tuple[GeneratorLetter, ...], remaining: int):
        if remaining == 0:
            yield prefix
            return
        last = prefix[-1] if prefix else None
        for letter in alphabet:
            if last is not None and letter.index == last.index and letter.sign == -last.sign:
                continue
            yield from extend(prefix + (letter,), remaining - 1)

    for length in range(max_len + 1):
        yield from extend((), length)


class _Countdown:
    """Shared candidate budget across nested searches."""

    def __init__(self, budget: int):
        self.budget = budget
        self.tested = 0

    def tick(self) -> None:
        self.tested += 1
        if self.tested > self.budget:
            raise SearchExhausted(self.tested - 1, self.budget)


def _root_search(
    y: CanonicalForm,
    e: int,
    max_word_length: int,
    indices: "range | list[int] | None",
    countdown: _Countdown,
    use_filter: bool,
) -> CanonicalForm | None:
    n = y.n
    if use_filter and canonical_exponent_sum(y) % e != 0:
        return None
    target_sum = canonical_exponent_sum(y)
    for letters in iter_reduced_words(n, max_word_length, indices):
        countdown.tick()
        if use_filter and sum(s for _, s in letters) * e != target_sum:
            continue
        x = braid_ops.normalize(BraidWord(n, letters))
        if equals(power(x, e), y):
            return x
    return None


def brute_force_root(
    q: RootQuery,
    *,
    indices: "range | list[int] | None" = None,
    use_filter: bool = True,
    max_candidates: int = DEFAULT_SEARCH_BUDGET,
) -> CanonicalForm | None:
    """Bounded exhaustive root extraction.

    Returns the first root in enumeration order, or None when no root exists
    within the length bound (which proves nothing about larger words). Raises
    :class:`SearchExhausted` when the candidate budget runs out first. Any
    returned value is re-verified against the query before it is returned.
    """
    countdown = _Countdown(max_candidates)
    x = _root_search(q.y, q.e, q.max_word_length, indices, countdown, use_filter)
    if x is not None:
        assert equals(power(x, q.e), q.y)
    return x


# ---------------------------------------------------------------------------
# Impersonation experiments
# ---------------------------------------------------------------------------

STRATEGY_RANDOM = "random-digest"
STRATEGY_REPLAY = "replay"
STRATEGY_ROOT = "root-attack"

STRATEGIES = (STRATEGY_RANDOM, STRATEGY_REPLAY, STRATEGY_ROOT)


@dataclasses.dataclass(frozen=True)
class AttackReport:
    strategy: str
    trials: int
    successes: int
    parameters: SamplerConfig
    note: str = ""

    def __post_init__(self):
        if self.successes > self.trials:
            raise InvalidParameterError("successes cannot exceed trials")

    @property
    def rate(self) -> float:
        return self.successes / self.trials if self.trials else 0.0


def report_table(reports: "list[AttackReport]") -> str:
    """Fixed-column rendering of attack outcomes."""
    header = f"{'strategy':<14} {'trials':>8} {'successes':>10} {'rate':>8}"
    rows = [header, "-" * len(header)]
    for rep in reports:
        rows.append(
            f"{rep.strategy:<14} {rep.trials:>8} {rep.successes:>10} {rep.rate:>8.4f}"
        )
    return "\n".join(rows)


def report_text(rep: AttackReport) -> str:
    """The key=value text form of a report."""
    lines = [
        f"strategy = {rep.strategy}",
        f"trials = {rep.trials}",
        f"successes = {rep.successes}",
        f"rate = {rep.rate:.6f}",
        f"parameters = {rep.parameters.echo()}",
    ]
    if rep.note:
        lines.append(f"note = {rep.note}")
    return "\n".join(lines) + "\n"


def recover_scheme1_secrets(
    pub, bound: int, *, max_candidates: int = DEFAULT_SEARCH_BUDGET
) -> "tuple[CanonicalForm, CanonicalForm] | None":
    """Search the two strand blocks for (a', b') with a'^r * b'^s = X.

    Enumerates lower-block candidates; for each, peels its power off X and
    root-searches the residual over the upper block. The split into two small
    block searches is exactly what makes the toy parameters fall.
    """
    lower = lower_generator_indices(pub.n)
    upper = upper_generator_indices(pub.n)
    countdown = _Countdown(max_candidates)
    for letters in iter_reduced_words(pub.n, bound, lower):
        countdown.tick()
        a = braid_ops.normalize(BraidWord(pub.n, letters))
        residual = multiply(inverse(power(a, pub.r)), pub.X)
        b = _root_search(residual, pub.s_exp, bound, upper, countdown, True)
        if b is not None:
            return a, b
    return None


def recover_scheme2_secret(
    pub, bound: int, *, max_candidates: int = DEFAULT_SEARCH_BUDGET
) -> "CanonicalForm | None":
    """Search the lower block for a' with a'^e * base * a'^f = X."""
    lower = lower_generator_indices(pub.n)
    countdown = _Countdown(max_candidates)
    for letters in iter_reduced_words(pub.n, bound, lower):
        countdown.tick()
        a = braid_ops.normalize(BraidWord(pub.n, letters))
        candidate = multiply(multiply(power(a, pub.e), pub.base), power(a, pub.f))
        if equals(candidate, pub.X):
            return a
    return None


def _make_responder(
    keys: "SchemeIKeyPair | SchemeIIKeyPair",
    strategy: str,
    rng: DeterministicRng,
    cfg: SessionConfig,
    root_bound: int,
    search_budget: int,
) -> "tuple[Callable[[CanonicalForm, int], bytes], str]":
    """Build the secret-less responder for a strategy.

    Returns (respond(Y, round_index) -> digest, note). Only public data, the
    experiment rng, and an eavesdropped transcript ever reach the responder.
    """
    pub = keys.public
    scheme = 1 if isinstance(keys, SchemeIKeyPair) else 2

    if strategy == STRATEGY_RANDOM:
        return (lambda Y, k: rng.randbytes(32)), "uniform 32-byte guesses"

    if strategy == STRATEGY_REPLAY:
        eavesdropped = run_session(keys, cfg, rng.spawn("eavesdrop"))
        digests = [r.digest for r in eavesdropped.rounds]
        note = "replaying digests from one eavesdropped honest session"
        return (lambda Y, k: digests[k % len(digests)]), note

    if strategy == STRATEGY_ROOT:
        recovered: "SchemeIKeyPair | SchemeIIKeyPair | None" = None
        try:
            if scheme == 1:
                found = recover_scheme1_secrets(pub, root_bound, max_candidates=search_budget)
                if found is not None:
                    recovered = SchemeIKeyPair(pub, found[0], found[1])
            else:
                found2 = recover_scheme2_secret(pub, root_bound, max_candidates=search_budget)
                if found2 is not None:
                    recovered = SchemeIIKeyPair(pub, found2)
        except SearchExhausted as exc:
            note = f"root search exhausted ({exc.candidates_tested} candidates)"
        else:
            note = (
                f"recovered secrets within word length {root_bound}"
                if recovered is not None
                else f"no root within word length {root_bound}"
            )

        if recovered is None:
            # Nothing recovered: answer with the digest of the bare challenge.
            return (lambda Y, k: hash_braid(Y)), note
        if scheme == 1:
            rec1 = recovered
            return (lambda Y, k: respond1(rec1, Y).digest), note
        rec2 = recovered
        return (lambda Y, k: respond2(rec2, Y).digest), note

    raise InvalidParameterError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")


def impersonation_experiment(
    keys: "SchemeIKeyPair | SchemeIIKeyPair",
    strategy: str,
    trials: int,
    rng: DeterministicRng,
    *,
    rounds: int = 1,
    sampler: SamplerConfig | None = None,
    root_bound: int | None = None,
    search_budget: int = DEFAULT_SEARCH_BUDGET,
) -> AttackReport:
    """Count how often a secret-less responder gets an honest verifier to
    accept, over full sessions with fresh challenges.

    The keypair parameterizes the experiment (the verifier needs the public
    key, the replay strategy needs one eavesdroppable honest session); the
    responder itself never receives the secrets.
    """
    if trials < 1:
        raise InvalidParameterError(f"trials must be >= 1, got {trials!r}")
    pub = keys.public
    scheme = 1 if isinstance(keys, SchemeIKeyPair) else 2
    if sampler is None:
        raise InvalidParameterError("an explicit SamplerConfig is required")
    cfg = SessionConfig(scheme, rounds, sampler)
    bound = root_bound if root_bound is not None else sampler.word_length
    respond, note = _make_responder(keys, strategy, rng.spawn("responder"), cfg, bound, search_budget)

    verifier_rng = rng.spawn("verifier")
    successes = 0
    for _ in range(trials):
        ok = True
        for k in range(rounds):
            if scheme == 1:
                ch = challenge1(pub, sampler, verifier_rng)
                answer = Response(respond(ch.Y, k))
                ok = verify1(pub, ch.c, ch.d, answer) and ok
            else:
                ch2 = challenge2(pub, sampler, verifier_rng)
                answer = Response(respond(ch2.Y, k))
                ok = verify2(pub, ch2.b, answer) and ok
        successes += int(ok)
    return AttackReport(strategy, trials, successes, sampler, note)
