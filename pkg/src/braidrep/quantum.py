"""Exterior-power Burau representation and the quantum gl(1|1) state sum.

``ψ^∧(w)^j_k`` is the coefficient of ``w_k`` in the image of ``w_j``; here it
is the minor of ``burau(w)`` on rows ``k`` and columns ``j``, so singleton
blocks reproduce ``burau(w)`` itself and ``wedge(uv) = wedge(u) @ wedge(v)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .braids import BraidWord, exponent, invert, random_word
from .burau import burau, burau_generator
from .errors import InvariantViolation, ShapeError, ValidationError
from .multiindex import MultiIndex, subsets
from .ring import Q, LaurentPoly, RingMatrix

WEDGE_BOUND = 10


def _minor(m: RingMatrix, rows: MultiIndex, cols: MultiIndex) -> LaurentPoly:
    if len(rows) == 0:
        return LaurentPoly.one(m.vars)
    return m.submatrix(rows, cols).det()


def wedge_entry_minor(w: BraidWord, j: MultiIndex, k: MultiIndex) -> LaurentPoly:
    if len(j) != len(k):
        raise ShapeError(f"|j|={len(j)} but |k|={len(k)}")
    return _minor(burau(w), k, j)


@dataclass(frozen=True)
class WedgeMatrix:
    """``ψ^∧(w)`` on the ``2^n``-dimensional wedge space.

    ``matrix[row(k), col(j)] == ψ^∧^j_k`` with rows and columns in ``basis``
    order (by size, then lexicographic).
    """

    n: int
    matrix: RingMatrix
    basis: tuple[MultiIndex, ...] = field(repr=False)

    def entry(self, j: MultiIndex, k: MultiIndex) -> LaurentPoly:
        pos = {b: i for i, b in enumerate(self.basis)}
        return self.matrix[pos[k], pos[j]]

    def diagonal(self) -> list[tuple[MultiIndex, LaurentPoly]]:
        return [(b, self.matrix[i, i]) for i, b in enumerate(self.basis)]


def exterior_power(m: RingMatrix) -> WedgeMatrix:
    n = m.rows
    basis = tuple(subsets(n))
    zero = LaurentPoly.zero(m.vars)
    rows = []
    for k in basis:
        rows.append([_minor(m, k, j) if len(j) == len(k) else zero for j in basis])
    return WedgeMatrix(n, RingMatrix(rows, m.vars), basis)


def _check_bound(n: int, bound: int):
    if n > bound:
        raise ValidationError(f"wedge space for n={n} exceeds the bound n <= {bound}")


def wedge_rep(w: BraidWord, bound: int = WEDGE_BOUND) -> WedgeMatrix:
    """Assemble ``ψ^∧(w)`` from minors of ``burau(w)``."""
    _check_bound(w.n, bound)
    return exterior_power(burau(w))


def wedge_rep_composed(w: BraidWord, bound: int = WEDGE_BOUND) -> WedgeMatrix:
    """Assemble ``ψ^∧(w)`` as a product of per-generator wedge matrices."""
    _check_bound(w.n, bound)
    basis = tuple(subsets(w.n))
    acc = RingMatrix.identity(len(basis), Q)
    cache: dict = {}
    for x in w.letters:
        if x not in cache:
            cache[x] = exterior_power(burau_generator(w.n, abs(x), 1 if x > 0 else -1)).matrix
        acc = acc @ cache[x]
    return WedgeMatrix(w.n, acc, basis)


def alternating_diagonal_sum(w: BraidWord, within: list[int] | None = None) -> LaurentPoly:
    """``Σ_j (-1)^|j| ψ^∧(w)^j_j`` over subsets ``j`` of ``within`` (default all)."""
    m = burau(w)
    total = LaurentPoly.zero(Q)
    for j in subsets(w.n, within):
        term = _minor(m, j, j)
        total = total - term if len(j) % 2 else total + term
    return total


def q_power(k: int) -> LaurentPoly:
    return LaurentPoly.var("q", Q, k)


def super_trace(w: BraidWord) -> LaurentPoly:
    return q_power(-exponent(w)) * alternating_diagonal_sum(w)


def qhat_state_sum(w: BraidWord) -> LaurentPoly:
    return q_power(w.n - 1 - exponent(w)) * alternating_diagonal_sum(w, list(range(2, w.n + 1)))


def qhat_determinant(w: BraidWord) -> LaurentPoly:
    """``q^{n-1-exp} det(I - M)`` with ``M`` the principal block on ``{2..n}``."""
    n = w.n
    pref = q_power(n - 1 - exponent(w))
    if n == 1:
        return pref
    principal = MultiIndex.range(n, 2, n)
    block = burau(w).submatrix(principal, principal)
    return pref * (RingMatrix.identity(n - 1, Q) - block).det()


def qhat(w: BraidWord, check: bool = True) -> LaurentPoly:
    """The gl(1|1) invariant of the closure, exact (not unit-normalized)."""
    value = qhat_state_sum(w)
    if check:
        other = qhat_determinant(w)
        if value != other:
            raise InvariantViolation(f"qhat routes disagree for {w}: {value} vs {other}")
    return value


@dataclass
class MarkovReport:
    trials: int
    failures: list[dict] = field(default_factory=list)
    moves: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json_obj(self) -> dict:
        return {"trials": self.trials, "failures": self.failures}


def conjugate(w: BraidWord, u: BraidWord) -> BraidWord:
    return u * w * invert(u)


def stabilize(w: BraidWord, sign: int) -> BraidWord:
    """``w · sigma_n^{±1}`` in ``B_{n+1}``."""
    return BraidWord(w.n + 1, w.letters + (sign * w.n,))


def qhat_markov_check(
    w: BraidWord, trials: int, seed: int, moves: str = "mixed", max_conjugator: int = 4
) -> MarkovReport:
    """Apply random Markov moves to ``w`` and compare ``qhat`` up to ``±q^k``.

    ``moves`` is ``"conjugate"``, ``"stabilize"`` or ``"mixed"``. Each trial
    starts from ``w`` itself.
    """
    if moves not in ("conjugate", "stabilize", "mixed"):
        raise ValidationError(f"unknown move kind {moves!r}")
    rng = random.Random(seed)
    before = qhat(w)
    before_canon = before.canonical_unit_form("q")
    report = MarkovReport(trials)
    for _ in range(trials):
        kind = moves if moves != "mixed" else rng.choice(("conjugate", "stabilize"))
        if kind == "conjugate" and w.n >= 2:
            u = random_word(rng, w.n, rng.randint(1, max_conjugator))
            moved = conjugate(w, u)
            label = f"conjugate by {u.to_text()}"
        else:
            sign = rng.choice((1, -1))
            moved = stabilize(w, sign)
            label = f"stabilize {'+' if sign > 0 else '-'}"
        after = qhat(moved)
        report.moves.append(label)
        if after.canonical_unit_form("q") != before_canon:
            report.failures.append(
                {
                    "move": label,
                    "braid": moved.to_json_obj(),
                    "before": before.to_json_obj(),
                    "after": after.to_json_obj(),
                }
            )
    return report
