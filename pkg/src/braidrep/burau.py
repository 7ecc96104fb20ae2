"""Full (unreduced) Burau representation and its lambda-characteristic minors.

Polynomials live over ``q`` with ``t = q^2``. Matrices act on row vectors, so
``burau(u * v) == burau(u) @ burau(v)``; every column sums to 1.
"""

from __future__ import annotations

from functools import lru_cache

from .braids import BraidWord, permutation
from .errors import ShapeError, ValidationError
from .multiindex import MultiIndex
from .ring import LAMBDA, Q, QL, LaurentPoly, RingMatrix, VarSet


def t_power(k: int, vars: VarSet = Q) -> LaurentPoly:
    return LaurentPoly.var("q", vars, 2 * k)


def generator_block(sign: int, vars: VarSet = Q) -> list[list[LaurentPoly]]:
    """The 2x2 block of sigma_i (``sign=+1``) or its inverse."""
    one = LaurentPoly.one(vars)
    zero = LaurentPoly.zero(vars)
    if sign > 0:
        t = t_power(1, vars)
        return [[one - t, one], [t, zero]]
    tinv = t_power(-1, vars)
    return [[zero, tinv], [one, one - tinv]]


@lru_cache(maxsize=None)
def burau_generator(n: int, i: int, sign: int = 1) -> RingMatrix:
    if not 1 <= i <= n - 1:
        raise ValidationError(f"generator index {i} out of range for B_{n}")
    if sign not in (1, -1):
        raise ValidationError(f"sign must be ±1, got {sign}")
    rows = [list(r) for r in RingMatrix.identity(n, Q).entries]
    block = generator_block(sign)
    for a in range(2):
        for b in range(2):
            rows[i - 1 + a][i - 1 + b] = block[a][b]
    return RingMatrix(rows, Q)


def apply_letter(m: RingMatrix, letter: int) -> RingMatrix:
    """``m @ burau_generator(letter)`` touching only columns ``i, i+1``."""
    i = abs(letter) - 1
    (a, b), (c, d) = generator_block(1 if letter > 0 else -1, m.vars)
    out = []
    for row in m.entries:
        x, y = row[i], row[i + 1]
        new = list(row)
        new[i] = x * a + y * c
        new[i + 1] = x * b + y * d
        out.append(new)
    return RingMatrix(out, m.vars)


def burau(w: BraidWord) -> RingMatrix:
    m = RingMatrix.identity(w.n, Q)
    for x in w.letters:
        m = apply_letter(m, x)
    return m


def lift_to_lambda(m: RingMatrix) -> RingMatrix:
    """Re-express a ``q`` matrix over ``(q, λ)``."""
    return m.map(lambda p: LaurentPoly(QL, {e + (0,): c for e, c in p.terms.items()}))


def burau_char_matrix(w: BraidWord) -> RingMatrix:
    """``burau(w) - λ I``."""
    lam = LaurentPoly.var(LAMBDA, QL)
    return lift_to_lambda(burau(w)) - RingMatrix.identity(w.n, QL).scale(lam)


def hfb_poincare_minor(w: BraidWord, rows: MultiIndex, cols: MultiIndex) -> LaurentPoly:
    """``det`` of the ``(rows, cols)`` block of ``burau(w) - λI``, over ``(q, λ)``."""
    if len(rows) != len(cols):
        raise ShapeError(f"|rows|={len(rows)} but |cols|={len(cols)}")
    if len(rows) == 0:
        raise ShapeError("multi-indices must be nonempty")
    return burau_char_matrix(w).submatrix(rows, cols).det()


def alexander_via_minor(w: BraidWord) -> LaurentPoly:
    """Alexander polynomial of the closure, normalized up to ``±q^k``."""
    if w.n < 2:
        raise ValidationError("the codimension-one minor needs n >= 2")
    principal = MultiIndex.range(w.n, 2, w.n)
    value = hfb_poincare_minor(w, principal, principal).substitute({LAMBDA: 1}, Q)
    return value.canonical_unit_form("q")


def morton_det(w: BraidWord) -> LaurentPoly:
    return burau_char_matrix(w).det()


def trivial_braid_necessary(w: BraidWord) -> bool:
    """Whether ``burau(w)`` at ``t = 1`` is the identity.

    Necessary, not sufficient, for ``w`` to be trivial.
    """
    return burau(w).substitute({"q": 1}).is_identity()


def permutation_matrix(w: BraidWord, vars: VarSet = Q) -> RingMatrix:
    """The ``t = 1`` shadow of ``burau(w)``: entry ``(p(j), j)`` is 1."""
    p = permutation(w)
    rows = [[0] * w.n for _ in range(w.n)]
    for j in range(1, w.n + 1):
        rows[p(j) - 1][j - 1] = 1
    return RingMatrix.from_ints(rows, vars)
