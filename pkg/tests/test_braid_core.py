import itertools

import pytest

import braidauth.braid as B
from braidauth.errors import InvalidParameterError
from braidauth.rewriting import RewritingClosure, free_reduce
from burau_ref import burau_equal, burau_matrix
from conftest import random_braid_word


def cf(n, text):
    return B.normalize(B.word(n, text))


# ---------------------------------------------------------------------------
# Construction and parsing
# ---------------------------------------------------------------------------

def test_identity_is_neutral(rng):
    e3 = B.identity(3)
    assert e3.inf == 0 and e3.factors == ()
    for _ in range(20):
        x = B.normalize(random_braid_word(rng, 3, rng.randrange(0, 8)))
        assert B.multiply(e3, x) == x
        assert B.multiply(x, e3) == x
    assert B.equals(B.identity(4), cf(4, "s1 S1"))


def test_strand_count_validation():
    with pytest.raises(InvalidParameterError):
        B.identity(1)
    with pytest.raises(InvalidParameterError):
        B.delta(0)
    with pytest.raises(InvalidParameterError):
        B.BraidWord(3, (B.GeneratorLetter(3, 1),))
    with pytest.raises(InvalidParameterError):
        B.BraidWord(3, (B.GeneratorLetter(1, 2),))
    B.identity(1024)
    with pytest.raises(InvalidParameterError):
        B.identity(1025)


def test_word_text_round_trip():
    w = B.word(4, "s1 s2 S1 s3")
    assert w.to_text() == "s1 s2 S1 s3"
    assert B.word(4, "s1.s2.S1.s3") == w
    assert B.word(4, "  s1   s2\tS1 s3 ") == w
    with pytest.raises(InvalidParameterError):
        B.word(4, "x1")
    with pytest.raises(InvalidParameterError):
        B.word(4, "s0")


def test_delta_examples():
    assert B.delta(3) == B.CanonicalForm(3, 1, ())
    assert B.delta_word(3).to_text() == "s1 s2 s1"
    assert B.normalize(B.delta_word(3)) == B.delta(3)
    assert B.braidword_to_permutation(B.delta_word(3)) == (2, 1, 0)
    for n in range(2, 9):
        assert len(B.delta_word(n)) == n * (n - 1) // 2
        assert B.braidword_to_permutation(B.delta_word(n)) == tuple(range(n - 1, -1, -1))


def test_canonicalform_rejects_bad_factors():
    with pytest.raises(InvalidParameterError):
        B.CanonicalForm(3, 0, ((0, 1, 2),))  # identity factor
    with pytest.raises(InvalidParameterError):
        B.CanonicalForm(3, 0, ((2, 1, 0),))  # half twist factor
    with pytest.raises(InvalidParameterError):
        B.CanonicalForm(3, 0, ((0, 0, 2),))  # not a bijection
    with pytest.raises(InvalidParameterError):
        # (s2 then s1) is not left weighted
        B.CanonicalForm(3, 0, ((0, 2, 1), (1, 0, 2)))


# ---------------------------------------------------------------------------
# Word <-> permutation
# ---------------------------------------------------------------------------

def test_braidword_to_permutation_examples():
    assert B.braidword_to_permutation(B.word(3, "s1 s2")) == (2, 0, 1)
    assert B.braidword_to_permutation(B.word(3, "")) == (0, 1, 2)
    # permutation forgets crossings: s1 s1 maps to the identity table
    assert B.braidword_to_permutation(B.word(3, "s1 s1")) == (0, 1, 2)
    assert B.normalize(B.word(3, "s1 s1")) != B.identity(3)


def test_permutation_to_braidword_examples():
    assert B.permutation_to_braidword((1, 0, 2)).to_text() == "s1"
    assert B.permutation_to_braidword((2, 1, 0)).to_text() == "s1 s2 s1"
    assert B.permutation_to_braidword((1, 0, 3, 2)).to_text() == "s1 s3"


def test_permutation_braid_bijection_exhaustive_small():
    for n in (2, 3, 4, 5):
        for table in itertools.permutations(range(n)):
            w = B.permutation_to_braidword(table)
            assert all(sign == 1 for _, sign in w.letters)
            assert len(w) == sum(
                1 for i in range(n) for j in range(i + 1, n) if table[i] > table[j]
            )
            assert B.braidword_to_permutation(w) == table


def test_permutation_braid_bijection_random_larger(rng):
    for n in (6, 8, 12, 16):
        for _ in range(25):
            table = list(range(n))
            rng.shuffle(table)
            table = tuple(table)
            assert B.braidword_to_permutation(B.permutation_to_braidword(table)) == table


# ---------------------------------------------------------------------------
# normalize: frozen examples
# ---------------------------------------------------------------------------

def test_normalize_examples():
    assert cf(3, "s1 s2 s1") == B.CanonicalForm(3, 1, ())
    assert cf(3, "s2 s1 s2") == B.CanonicalForm(3, 1, ())
    assert cf(3, "S1") == B.CanonicalForm(3, -1, ((2, 0, 1),))
    assert cf(3, "s1 s1") == B.CanonicalForm(3, 0, ((1, 0, 2), (1, 0, 2)))


def test_multiply_examples(rng):
    for n in (3, 4, 6):
        for _ in range(10):
            x = B.normalize(random_braid_word(rng, n, 8))
            assert B.multiply(x, B.inverse(x)) == B.identity(n)
    assert B.multiply(cf(4, "s1"), cf(4, "s3")) == B.multiply(cf(4, "s3"), cf(4, "s1"))
    with pytest.raises(InvalidParameterError):
        B.multiply(B.identity(3), B.identity(4))


def test_inverse_examples():
    assert B.inverse(B.identity(5)) == B.identity(5)
    assert B.inverse(cf(3, "s1")) == B.CanonicalForm(3, -1, ((2, 0, 1),))
    assert B.inverse(cf(3, "s1")) == cf(3, "S1")


def test_inverse_involution(rng):
    for n in (3, 5, 8):
        for _ in range(15):
            x = B.normalize(random_braid_word(rng, n, 10))
            assert B.inverse(B.inverse(x)) == x


def test_power_examples():
    x = cf(3, "s1")
    assert B.power(x, 5) != B.identity(3)
    assert B.power(x, 1) == x
    assert B.power(x, 0) == B.identity(3)
    assert B.power(cf(3, "s1 s2"), 3) == B.CanonicalForm(3, 2, ())
    with pytest.raises(InvalidParameterError):
        B.power(x, -1)


def test_power_matches_repeated_multiply(rng):
    for n in (3, 6):
        for _ in range(10):
            x = B.normalize(random_braid_word(rng, n, 6))
            acc = B.identity(n)
            for e in range(5):
                assert B.power(x, e) == acc
                acc = B.multiply(acc, x)


def test_equals_examples():
    assert B.equals(cf(3, "s1 s2 s1"), cf(3, "s2 s1 s2"))
    assert not B.equals(cf(3, "s1"), cf(3, "s2"))
    with pytest.raises(InvalidParameterError):
        B.equals(B.identity(3), B.identity(4))


def test_canonical_length_examples():
    assert B.canonical_length(B.identity(6)) == 0
    assert B.canonical_length(B.delta(6)) == 0
    assert B.canonical_length(cf(3, "s1 s1")) == 2


# ---------------------------------------------------------------------------
# tau and the half twist
# ---------------------------------------------------------------------------

def test_tau_examples():
    assert B.tau(cf(4, "s1")) == cf(4, "s3")
    assert B.tau(cf(4, "s2")) == cf(4, "s2")
    assert B.equals(
        B.multiply(B.delta(3), cf(3, "s1")), B.multiply(cf(3, "s2"), B.delta(3))
    )


def test_tau_involution_and_twist_commutation(rng):
    for n in (3, 4, 5, 8):
        d = B.delta(n)
        d2 = B.power(d, 2)
        for _ in range(25):
            x = B.normalize(random_braid_word(rng, n, 10))
            assert B.tau(B.tau(x)) == x
            assert B.multiply(d, x) == B.multiply(B.tau(x), d)
            assert B.multiply(d2, x) == B.multiply(x, d2)


# ---------------------------------------------------------------------------
# Structural invariants
# ---------------------------------------------------------------------------

def test_left_weightedness_of_all_outputs(rng):
    for n in (3, 4, 8):
        for _ in range(40):
            x = B.normalize(random_braid_word(rng, n, 12))
            y = B.normalize(random_braid_word(rng, n, 12))
            for z in (x, y, B.multiply(x, y), B.inverse(x), B.power(x, 3), B.tau(y)):
                B.validate_canonical_form(z.n, z.inf, z.factors)


def test_idempotence_of_reexpansion(rng):
    for n in (3, 5, 8):
        for _ in range(30):
            x = B.normalize(random_braid_word(rng, n, 12))
            assert B.normalize(B.to_braidword(x)) == x


def test_torsion_freeness_spot_check(rng):
    checked = 0
    while checked < 100:
        n = rng.choice((3, 4, 5, 6, 8))
        x = B.normalize(random_braid_word(rng, n, rng.randrange(1, 10)))
        if x == B.identity(n):
            continue
        checked += 1
        for e in (2, 3):
            assert B.power(x, e) != B.identity(n)


def test_associativity(rng):
    for n in (3, 4, 8):
        for _ in range(20):
            x, y, z = (B.normalize(random_braid_word(rng, n, 8)) for _ in range(3))
            assert B.multiply(B.multiply(x, y), z) == B.multiply(x, B.multiply(y, z))


# ---------------------------------------------------------------------------
# Relation invariance via an in-test rewriter
# ---------------------------------------------------------------------------

def _apply_random_relations(rng, w):
    letters = list(w.letters)
    for _ in range(8):
        move = rng.randrange(3)
        if move == 0:
            spots = [
                i for i in range(len(letters) - 1)
                if abs(letters[i].index - letters[i + 1].index) > 1
            ]
            if spots:
                i = rng.choice(spots)
                letters[i], letters[i + 1] = letters[i + 1], letters[i]
        elif move == 1:
            i = rng.randrange(len(letters) + 1)
            g = B.GeneratorLetter(rng.randrange(1, w.n), rng.choice((1, -1)))
            letters[i:i] = [g, B.GeneratorLetter(g.index, -g.sign)]
        else:
            spots = [
                i for i in range(len(letters) - 2)
                if letters[i].sign == letters[i + 1].sign == letters[i + 2].sign
                and letters[i].index == letters[i + 2].index
                and abs(letters[i].index - letters[i + 1].index) == 1
            ]
            if spots:
                i = rng.choice(spots)
                a, b = letters[i], letters[i + 1]
                letters[i : i + 3] = [b, a, b]
    return B.BraidWord(w.n, tuple(letters))


def test_relation_invariance(rng):
    for n in (3, 4, 8):
        for _ in range(40):
            w = random_braid_word(rng, n, 10)
            w2 = _apply_random_relations(rng, w)
            assert B.equals(B.normalize(w), B.normalize(w2))


# ---------------------------------------------------------------------------
# Independent referees: Burau on 3 strands, rewriting closure
# ---------------------------------------------------------------------------

def test_burau_reference_sanity():
    s1 = B.word(3, "s1")
    s2 = B.word(3, "s2")
    assert burau_equal(B.word(3, "s1 s2 s1"), B.word(3, "s2 s1 s2"))
    assert not burau_equal(s1, s2)
    assert burau_matrix(B.word(3, "s1 S1").letters) == burau_matrix(B.word(3, "").letters)


def test_equals_agrees_with_burau(rng):
    for _ in range(300):
        u = random_braid_word(rng, 3, rng.randrange(0, 9))
        v = random_braid_word(rng, 3, rng.randrange(0, 9))
        assert B.equals(B.normalize(u), B.normalize(v)) == burau_equal(u, v)


def test_rewriting_rules_are_sound_by_burau():
    # every closure edge pattern must be a true identity on 3 strands
    from braidauth.rewriting import _BRAID_PATTERNS

    for (sx, sy, sz), (tx, ty, tz) in _BRAID_PATTERNS.items():
        lhs = B.BraidWord(
            3,
            (
                B.GeneratorLetter(1, sx),
                B.GeneratorLetter(2, sy),
                B.GeneratorLetter(1, sz),
            ),
        )
        rhs = B.BraidWord(
            3,
            (
                B.GeneratorLetter(2, tx),
                B.GeneratorLetter(1, ty),
                B.GeneratorLetter(2, tz),
            ),
        )
        assert burau_equal(lhs, rhs)


def test_equals_agrees_with_rewriting_closure_small(rng):
    closure = RewritingClosure(3, 7)
    alphabet = [B.GeneratorLetter(i, s) for i in (1, 2) for s in (1, -1)]
    words = [
        B.BraidWord(3, p)
        for length in range(4)
        for p in itertools.product(alphabet, repeat=length)
    ]
    forms = [B.normalize(w) for w in words]
    for i, j in itertools.combinations(range(len(words)), 2):
        assert (forms[i] == forms[j]) == closure.equal(words[i], words[j])


def test_free_reduce():
    w = B.word(3, "s1 S1 s2")
    assert free_reduce(w.letters) == B.word(3, "s2").letters
    assert free_reduce(B.word(3, "s1 s2 S2 S1").letters) == ()
