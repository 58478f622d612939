"""Reduced Burau matrices for the 3-strand group: an equality reference that
shares no code or theory with the canonical-form engine.

Entries are Laurent polynomials in one variable over the integers, stored as
{exponent: coefficient} dicts. The representation is faithful on 3 strands,
so matrix equality decides word equality exactly there.
"""

from __future__ import annotations

Poly = dict[int, int]
Matrix = tuple[tuple[Poly, Poly], tuple[Poly, Poly]]


def poly(*terms: tuple[int, int]) -> Poly:
    out: Poly = {}
    for exp, coef in terms:
        out[exp] = out.get(exp, 0) + coef
        if out[exp] == 0:
            del out[exp]
    return out


def padd(a: Poly, b: Poly) -> Poly:
    out = dict(a)
    for exp, coef in b.items():
        out[exp] = out.get(exp, 0) + coef
        if out[exp] == 0:
            del out[exp]
    return out


def pmul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            exp = e1 + e2
            out[exp] = out.get(exp, 0) + c1 * c2
            if out[exp] == 0:
                del out[exp]
    return out


def mmul(a: Matrix, b: Matrix) -> Matrix:
    return tuple(
        tuple(
            padd(pmul(a[i][0], b[0][j]), pmul(a[i][1], b[1][j]))
            for j in range(2)
        )
        for i in range(2)
    )  # type: ignore[return-value]


_ZERO: Poly = {}
_ONE = poly((0, 1))

GEN_MATRICES = {
    (1, 1): ((poly((1, -1)), _ONE), (_ZERO, _ONE)),
    (2, 1): ((_ONE, _ZERO), (poly((1, 1)), poly((1, -1)))),
    (1, -1): ((poly((-1, -1)), poly((-1, 1))), (_ZERO, _ONE)),
    (2, -1): ((_ONE, _ZERO), (_ONE, poly((-1, -1)))),
}

IDENTITY: Matrix = ((_ONE, _ZERO), (_ZERO, _ONE))


def burau_matrix(letters) -> Matrix:
    """Matrix of a 3-strand word (letters are (index, sign) pairs)."""
    m = IDENTITY
    for index, sign in letters:
        m = mmul(m, GEN_MATRICES[(index, sign)])
    return m


def burau_equal(u, v) -> bool:
    """Exact equality of two 3-strand words."""
    assert u.n == 3 and v.n == 3
    return burau_matrix(u.letters) == burau_matrix(v.letters)
