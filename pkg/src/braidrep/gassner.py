"""Colored Burau machine and the unreduced Gassner representation.

Each strand carries its own variable ``t_a``. Crossing ``sigma_i`` uses the
variable of the strand currently at position ``i`` (the over-strand), and
``sigma_i^{-1}`` the one at position ``i+1``; the coloring is then swapped.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braids import BraidWord, Permutation, is_pure
from .errors import PurityError, ShapeError, ValidationError
from .multiindex import MultiIndex
from .ring import LAMBDA, LaurentPoly, Q, QL, RingMatrix, VarSet, gassner_vars


@dataclass(frozen=True)
class ColoredBurauState:
    matrix: RingMatrix
    coloring: Permutation

    @classmethod
    def initial(cls, n: int) -> ColoredBurauState:
        return cls(RingMatrix.identity(n, gassner_vars(n)), Permutation.identity(n))

    @property
    def n(self) -> int:
        return self.coloring.n


def _colored_block(vars: VarSet, a: int, sign: int):
    one, zero = LaurentPoly.one(vars), LaurentPoly.zero(vars)
    t = LaurentPoly.var(f"t{a}", vars)
    if sign > 0:
        return (one - t, one), (t, zero)
    tinv = t.inverse()
    return (zero, tinv), (one, one - tinv)


def colored_burau_step(state: ColoredBurauState, letter: int) -> ColoredBurauState:
    n = state.n
    i = abs(letter)
    if letter == 0 or i > n - 1:
        raise ValidationError(f"letter {letter} out of range for B_{n}")
    colors = list(state.coloring.images)
    a = colors[i - 1] if letter > 0 else colors[i]
    (b11, b12), (b21, b22) = _colored_block(state.matrix.vars, a, letter)
    out = []
    for row in state.matrix.entries:
        x, y = row[i - 1], row[i]
        new = list(row)
        new[i - 1] = x * b11 + y * b21
        new[i] = x * b12 + y * b22
        out.append(new)
    colors[i - 1], colors[i] = colors[i], colors[i - 1]
    return ColoredBurauState(RingMatrix(out, state.matrix.vars), Permutation(tuple(colors)))


def colored_burau(w: BraidWord) -> ColoredBurauState:
    state = ColoredBurauState.initial(w.n)
    for x in w.letters:
        state = colored_burau_step(state, x)
    return state


def gassner(w: BraidWord) -> RingMatrix:
    if not is_pure(w):
        raise PurityError(f"{w} is not a pure braid")
    return colored_burau(w).matrix


def specialize(m: RingMatrix | LaurentPoly, n: int):
    """Send every ``t_a`` to ``t = q^2``; ``λ``, if present, is kept."""
    src = m.vars
    target = QL if LAMBDA in src else Q
    t = LaurentPoly.var("q", target, 2)
    return m.substitute({f"t{a}": t for a in range(1, n + 1)}, target)


def gassner_char_matrix(w: BraidWord) -> RingMatrix:
    n = w.n
    vars = gassner_vars(n, with_lambda=True)
    lifted = gassner(w).map(lambda p: LaurentPoly(vars, {e + (0,): c for e, c in p.terms.items()}))
    lam = LaurentPoly.var(LAMBDA, vars)
    return lifted - RingMatrix.identity(n, vars).scale(lam)


def hfp_poincare_minor(w: BraidWord, rows: MultiIndex, cols: MultiIndex) -> LaurentPoly:
    if len(rows) != len(cols):
        raise ShapeError(f"|rows|={len(rows)} but |cols|={len(cols)}")
    if len(rows) == 0:
        raise ShapeError("multi-indices must be nonempty")
    return gassner_char_matrix(w).submatrix(rows, cols).det()
