"""Cancellation-free state enumeration.

A Burau entry is kept as the list of signed sheet monomials produced by
multiplying generator matrices without merging like terms. States pick one
monomial per matched slot (or an anchor on the diagonal), and their signed
generating function is compared against determinants computed elsewhere.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass
from itertools import permutations, product
from math import prod
from typing import Iterator, NamedTuple, Union

from .braids import BraidWord, Permutation, exponent
from .errors import InvariantViolation, ResourceError, ShapeError, ValidationError
from .multiindex import MultiIndex, subsets
from .quantum import wedge_entry_minor
from .ring import QL, Q, LaurentPoly

DEFAULT_BUDGET = 10**7


def default_budget() -> int:
    raw = os.environ.get("BRAIDREP_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ValidationError(f"BRAIDREP_BUDGET must be an integer, got {raw!r}") from None
    if value <= 0:
        raise ValidationError("BRAIDREP_BUDGET must be positive")
    return value


class FormalMonomial(NamedTuple):
    sign: int
    sheet: int


FormalEntry = tuple  # tuple[FormalMonomial, ...]


class Anchor(NamedTuple):
    index: int


class Monomial(NamedTuple):
    """Choice of the ``pos``-th monomial of a formal entry."""

    pos: int
    sign: int
    sheet: int


Factor = Union[Anchor, Monomial]

_ONE_MINUS_T = (FormalMonomial(1, 0), FormalMonomial(-1, 1))
_T = (FormalMonomial(1, 1),)
_ONE = (FormalMonomial(1, 0),)
_ONE_MINUS_TINV = (FormalMonomial(1, 0), FormalMonomial(-1, -1))
_TINV = (FormalMonomial(1, -1),)


def _formal_block(sign: int):
    if sign > 0:
        return (_ONE_MINUS_T, _ONE), (_T, ())
    return ((), _TINV), (_ONE, _ONE_MINUS_TINV)


def _times(entry, g):
    return tuple(FormalMonomial(a.sign * b.sign, a.sheet + b.sheet) for a in entry for b in g)


def formal_burau(w: BraidWord, budget: int | None = None) -> tuple[tuple[FormalEntry, ...], ...]:
    """Burau matrix with entries as uncancelled monomial lists (0-based access)."""
    budget = default_budget() if budget is None else budget
    n = w.n
    rows = [[_ONE if i == j else () for j in range(n)] for i in range(n)]
    for x in w.letters:
        i = abs(x) - 1
        (g11, g12), (g21, g22) = _formal_block(x)
        for row in rows:
            a, b = row[i], row[i + 1]
            row[i] = _times(a, g11) + _times(b, g21)
            row[i + 1] = _times(a, g12) + _times(b, g22)
        total = sum(len(e) for row in rows for e in row)
        if total > budget:
            raise ResourceError(f"formal Burau matrix of {w} exceeds the budget of {budget} monomials")
    return tuple(tuple(r) for r in rows)


def collapse(entry: FormalEntry) -> LaurentPoly:
    terms: dict = {}
    for m in entry:
        key = (2 * m.sheet,)
        terms[key] = terms.get(key, 0) + m.sign
    return LaurentPoly(Q, terms)


@dataclass(frozen=True)
class DecoratedGenerator:
    """One decorated state: slot ``s`` pairs ``rows[s]`` with ``cols[matching(s)]``."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]
    matching: Permutation
    factors: tuple[Factor, ...]
    a1: int
    a2: int
    msign: int

    def weight(self) -> LaurentPoly:
        """``msign · t^a1 · λ^a2`` over ``(q, λ)``."""
        return LaurentPoly(QL, {(2 * self.a1, self.a2): self.msign})

    def to_json_obj(self) -> dict:
        factors = []
        for f in self.factors:
            if isinstance(f, Anchor):
                factors.append({"anchor": f.index})
            else:
                factors.append({"pos": f.pos, "sign": f.sign, "sheet": f.sheet})
        return {
            "rows": list(self.rows),
            "cols": list(self.cols),
            "sigma": list(self.matching.images),
            "factors": factors,
            "a1": self.a1,
            "a2": self.a2,
            "msign": self.msign,
        }


def _options(formal, rows, cols, sigma, anchors: bool):
    """Per-slot choices for one matching ``sigma`` (0-based images)."""
    out = []
    for s, r in enumerate(rows):
        c = cols[sigma[s]]
        opts = [Monomial(p, m.sign, m.sheet) for p, m in enumerate(formal[r - 1][c - 1])]
        if anchors and r == c:
            opts.append(Anchor(r))
        out.append(opts)
    return out


def _perm_sign(sigma) -> int:
    return Permutation(tuple(x + 1 for x in sigma)).sign() if sigma else 1


def count_states(formal, rows, cols, anchors: bool = True) -> int:
    m = len(rows)
    total = 0
    for sigma in permutations(range(m)):
        total += prod(
            len(formal[r - 1][cols[sigma[s]] - 1]) + (1 if anchors and r == cols[sigma[s]] else 0)
            for s, r in enumerate(rows)
        )
    return total


def _check_sizes(j: MultiIndex, k: MultiIndex):
    if len(j) != len(k):
        raise ShapeError(f"|j|={len(j)} but |k|={len(k)}")
    if len(j) == 0:
        raise ShapeError("multi-indices must be nonempty")


def iter_states(
    w: BraidWord, j: MultiIndex, k: MultiIndex, budget: int | None = None, anchors: bool = True
) -> Iterator[DecoratedGenerator]:
    budget = default_budget() if budget is None else budget
    formal = formal_burau(w, budget)
    rows, cols = tuple(j), tuple(k)
    n_states = count_states(formal, rows, cols, anchors)
    if n_states > budget:
        raise ResourceError(f"{n_states} states for {w}, {j}, {k} exceed the budget of {budget}")
    for sigma in permutations(range(len(rows))):
        psign = _perm_sign(sigma)
        matching = Permutation(tuple(x + 1 for x in sigma))
        for choice in product(*_options(formal, rows, cols, sigma, anchors)):
            a1 = a2 = 0
            sign = psign
            for f in choice:
                if isinstance(f, Anchor):
                    a2 += 1
                    sign = -sign
                else:
                    a1 += f.sheet
                    sign *= f.sign
            yield DecoratedGenerator(rows, cols, matching, choice, a1, a2, sign)


def enumerate_states(w: BraidWord, j: MultiIndex, k: MultiIndex, budget: int | None = None) -> list[DecoratedGenerator]:
    _check_sizes(j, k)
    return list(iter_states(w, j, k, budget))


def hfb_poincare_from_states(w: BraidWord, j: MultiIndex, k: MultiIndex, budget: int | None = None) -> LaurentPoly:
    """``Σ msign · t^a1 · λ^a2`` over all decorated states.

    Walks the same state space as :func:`enumerate_states` without building
    the generator objects.
    """
    _check_sizes(j, k)
    budget = default_budget() if budget is None else budget
    formal = formal_burau(w, budget)
    rows, cols = tuple(j), tuple(k)
    n_states = count_states(formal, rows, cols)
    if n_states > budget:
        raise ResourceError(f"{n_states} states for {w}, {j}, {k} exceed the budget of {budget}")
    acc: Counter = Counter()
    for sigma in permutations(range(len(rows))):
        psign = _perm_sign(sigma)
        slots = []
        for s, r in enumerate(rows):
            c = cols[sigma[s]]
            # (sign, sheet, anchor count)
            opts = [(m.sign, m.sheet, 0) for m in formal[r - 1][c - 1]]
            if r == c:
                opts.append((-1, 0, 1))
            slots.append(opts)
        for choice in product(*slots):
            sign, a1, a2 = psign, 0, 0
            for sg, sh, an in choice:
                sign *= sg
                a1 += sh
                a2 += an
            acc[(2 * a1, a2)] += sign
    return LaurentPoly(QL, dict(acc))


# CFK states and the Γ-terms of the expanded state sum


@dataclass(frozen=True)
class BijectionPair:
    cfk_state: DecoratedGenerator
    gamma_term: DecoratedGenerator
    cfk_weight: LaurentPoly
    gamma_weight: LaurentPoly


class BijectionViolation(InvariantViolation):
    def __init__(self, message, state=None):
        super().__init__(message)
        self.state = state


def strip_anchors(x: DecoratedGenerator) -> DecoratedGenerator:
    """Forget anchor slots; what is left is a Γ-term on the surviving indices."""
    keep = [s for s, f in enumerate(x.factors) if not isinstance(f, Anchor)]
    pos = {s: i for i, s in enumerate(keep)}
    sigma = x.matching.images
    for s in keep:
        if sigma[s] - 1 not in pos:
            raise BijectionViolation(f"slot {s} is matched onto an anchor slot", x)
    matching = Permutation(tuple(pos[sigma[s] - 1] + 1 for s in keep))
    factors = tuple(x.factors[s] for s in keep)
    sign = matching.sign()
    for f in factors:
        sign *= f.sign
    return DecoratedGenerator(
        tuple(x.rows[s] for s in keep),
        tuple(x.rows[s] for s in keep),
        matching,
        factors,
        sum(f.sheet for f in factors),
        0,
        sign,
    )


def gamma_terms(w: BraidWord, budget: int | None = None) -> list[DecoratedGenerator]:
    """Summands of the expanded gl(1|1) state sum, enumerated directly.

    One term per multi-index ``j ⊆ {2..n}``, matching ``σ`` and choice of one
    monomial from each entry ``(j_r, j_σ(r))``; the empty index gives one term.
    """
    budget = default_budget() if budget is None else budget
    formal = formal_burau(w, budget)
    out = [DecoratedGenerator((), (), Permutation(()), (), 0, 0, 1)]
    for jj in subsets(w.n, range(2, w.n + 1))[1:]:
        rows = tuple(jj)
        for sigma in permutations(range(len(rows))):
            matching = Permutation(tuple(x + 1 for x in sigma))
            psign = matching.sign()
            for choice in product(*_options(formal, rows, rows, sigma, anchors=False)):
                sign = psign
                for f in choice:
                    sign *= f.sign
                out.append(DecoratedGenerator(rows, rows, matching, choice, sum(f.sheet for f in choice), 0, sign))
            if len(out) > budget:
                raise ResourceError(f"Γ-term count for {w} exceeds the budget of {budget}")
    return out


def _state_key(x: DecoratedGenerator):
    return (x.rows, x.matching.images, x.factors)


def cfk_weight(x: DecoratedGenerator) -> LaurentPoly:
    """``(-1)^M t^A`` of a CFK generator, as a Laurent monomial over ``q``."""
    return LaurentPoly(Q, {(2 * x.a1,): x.msign})


def gamma_weight(term: DecoratedGenerator, n: int, exp: int) -> LaurentPoly:
    """Value of a Γ-term: ``q^{n-1-exp} (-1)^{|j|} sgn(σ) Π sgn · t^S``."""
    sign = term.msign * (-1 if len(term.rows) % 2 else 1)
    return LaurentPoly(Q, {(2 * term.a1 + n - 1 - exp,): sign})


def cfk_weight_bijection(w: BraidWord, budget: int | None = None) -> list[BijectionPair]:
    """Pair every CFK state with its anchor-stripped Γ-term and check weights.

    Raises :class:`BijectionViolation` if a weight relation fails, two states
    share an image, or the images miss a directly enumerated Γ-term.
    """
    n = w.n
    if n < 2:
        raise ValidationError("the CFK diagram needs n >= 2")
    exp = exponent(w)
    principal = MultiIndex.range(n, 2, n)
    normalization = LaurentPoly(Q, {(n - 1 - exp,): (-1) ** ((1 - n) % 2)})
    pairs = []
    seen = set()
    for x in iter_states(w, principal, principal, budget):
        f = strip_anchors(x)
        wx, wf = cfk_weight(x), gamma_weight(f, n, exp)
        if normalization * wx != wf:
            raise BijectionViolation(f"weight relation fails for state {x.to_json_obj()}", x)
        key = _state_key(f)
        if key in seen:
            raise BijectionViolation(f"two CFK states map to the same Γ-term {f.to_json_obj()}", x)
        seen.add(key)
        pairs.append(BijectionPair(x, f, wx, wf))
    direct = {_state_key(g) for g in gamma_terms(w, budget)}
    if direct != seen:
        missing = len(direct - seen)
        extra = len(seen - direct)
        raise BijectionViolation(f"image mismatch: {missing} Γ-terms missed, {extra} images not Γ-terms")
    return pairs


# tangle invariant


def tangle_delta(w: BraidWord, jstar: MultiIndex, k: MultiIndex) -> LaurentPoly:
    """``(-1)^{|j*|} ψ^∧(w)^j_k`` with ``j`` the complement of ``j*``; zero off-degree."""
    _check_tangle(w, jstar, k)
    j = jstar.complement()
    if len(j) != len(k):
        return LaurentPoly.zero(Q)
    value = wedge_entry_minor(w, j, k)
    return -value if len(jstar) % 2 else value


def _check_tangle(w: BraidWord, jstar: MultiIndex, k: MultiIndex):
    if jstar.n != w.n or k.n != w.n:
        raise ShapeError(f"multi-indices must live in 1..{w.n}")


def tangle_states(w: BraidWord, jstar: MultiIndex, k: MultiIndex, budget: int | None = None) -> Iterator[DecoratedGenerator]:
    """Generators of the ``(j*, k)`` idempotent summand.

    Bottom arcs in ``j*`` are occupied by anchors; each remaining index
    ``j_r`` is matched with ``k_σ(r)`` through a monomial of the Burau entry
    in row ``k_σ(r)``, column ``j_r`` (the wedge coefficient convention).
    """
    _check_tangle(w, jstar, k)
    budget = default_budget() if budget is None else budget
    j = tuple(jstar.complement())
    cols = tuple(k)
    if len(j) != len(cols):
        return
    formal = formal_burau(w, budget)
    anchors = tuple(Anchor(a) for a in jstar)
    base_sign = -1 if len(anchors) % 2 else 1
    count = 0
    for sigma in permutations(range(len(j))):
        matching = Permutation(tuple(x + 1 for x in sigma))
        psign = matching.sign() * base_sign
        slots = []
        for r, jr in enumerate(j):
            entry = formal[cols[sigma[r]] - 1][jr - 1]
            slots.append([Monomial(p, m.sign, m.sheet) for p, m in enumerate(entry)])
        count += prod(len(s) for s in slots)
        if count > budget:
            raise ResourceError(f"tangle states for {w} exceed the budget of {budget}")
        for choice in product(*slots):
            sign = psign
            for f in choice:
                sign *= f.sign
            yield DecoratedGenerator(j, cols, matching, anchors + choice, sum(f.sheet for f in choice), len(anchors), sign)


def tangle_delta_from_states(w: BraidWord, jstar: MultiIndex, k: MultiIndex, budget: int | None = None) -> LaurentPoly:
    terms: Counter = Counter()
    for x in tangle_states(w, jstar, k, budget):
        terms[(2 * x.a1,)] += x.msign
    return LaurentPoly(Q, dict(terms))
