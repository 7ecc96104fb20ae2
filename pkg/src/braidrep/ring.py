"""Exact integer Laurent polynomials in several variables, and matrices over them.

Everything is immutable. A polynomial stores a dict from exponent tuples to
nonzero Python ints; equality is equality of those dicts.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import RingMismatchError, ShapeError, SubstitutionError, ValidationError
from .multiindex import MultiIndex

LAMBDA = "λ"


@dataclass(frozen=True)
class VarSet:
    names: tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if len(set(names)) != len(names):
            raise ValidationError(f"duplicate variable names in {names}")

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __contains__(self, name):
        return name in self.names

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ValidationError(f"variable {name!r} not in {list(self.names)}") from None


Q = VarSet(("q",))
QL = VarSet(("q", LAMBDA))


def gassner_vars(n: int, with_lambda: bool = False) -> VarSet:
    names = tuple(f"t{i}" for i in range(1, n + 1))
    return VarSet(names + ((LAMBDA,) if with_lambda else ()))


def _check_same(a: VarSet, b: VarSet):
    if a != b:
        raise RingMismatchError(f"ring mismatch: {list(a.names)} vs {list(b.names)}")


class LaurentPoly:
    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, vars: VarSet, terms: Mapping[tuple[int, ...], int] | None = None):
        self.vars = vars
        clean = {}
        if terms:
            width = len(vars)
            for e, c in terms.items():
                if c:
                    e = tuple(e)
                    if len(e) != width:
                        raise ValidationError(f"exponent {e} has wrong length for {list(vars.names)}")
                    clean[e] = int(c)
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, vars: VarSet, terms: dict) -> LaurentPoly:
        # caller guarantees normal form
        p = cls.__new__(cls)
        p.vars = vars
        p.terms = terms
        p._hash = None
        return p

    # constructors

    @classmethod
    def zero(cls, vars: VarSet) -> LaurentPoly:
        return cls._raw(vars, {})

    @classmethod
    def const(cls, c: int, vars: VarSet) -> LaurentPoly:
        return cls._raw(vars, {(0,) * len(vars): int(c)} if c else {})

    @classmethod
    def one(cls, vars: VarSet) -> LaurentPoly:
        return cls.const(1, vars)

    @classmethod
    def monomial(cls, vars: VarSet, exps: Mapping[str, int] | Sequence[int], coeff: int = 1) -> LaurentPoly:
        if isinstance(exps, Mapping):
            e = [0] * len(vars)
            for name, k in exps.items():
                e[vars.index(name)] += k
            exps = e
        return cls(vars, {tuple(exps): coeff})

    @classmethod
    def var(cls, name: str, vars: VarSet, power: int = 1) -> LaurentPoly:
        return cls.monomial(vars, {name: power})

    # basic queries

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_unit(self) -> bool:
        """True for ``±`` a monomial."""
        return len(self.terms) == 1 and abs(next(iter(self.terms.values()))) == 1

    def coeff(self, exps: Sequence[int]) -> int:
        return self.terms.get(tuple(exps), 0)

    def exponents(self, name: str) -> list[int]:
        i = self.vars.index(name)
        return [e[i] for e in self.terms]

    def __len__(self):
        return len(self.terms)

    # arithmetic

    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            _check_same(self.vars, other.vars)
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other, self.vars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly._raw(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.terms, other.terms
        if not a or not b:
            return LaurentPoly._raw(self.vars, {})
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        if len(self.vars) == 1:
            for (ea,), ca in a.items():
                for (eb,), cb in b.items():
                    k = (ea + eb,)
                    out[k] = get(k, 0) + ca * cb
        else:
            for ea, ca in a.items():
                for eb, cb in b.items():
                    k = tuple(x + y for x, y in zip(ea, eb))
                    out[k] = get(k, 0) + ca * cb
        return LaurentPoly._raw(self.vars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = LaurentPoly.one(self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> LaurentPoly:
        if not self.is_unit():
            raise SubstitutionError(f"{self} is not a unit")
        (e, c), = self.terms.items()
        return LaurentPoly._raw(self.vars, {tuple(-x for x in e): c})

    def shift(self, exps: Sequence[int]) -> LaurentPoly:
        """Multiply by the monomial with exponent vector ``exps``."""
        return LaurentPoly._raw(
            self.vars, {tuple(x + y for x, y in zip(e, exps)): c for e, c in self.terms.items()}
        )

    # equality / hashing

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other, self.vars)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self.terms.items())))
        return self._hash

    # substitution

    def substitute(self, assignment: Mapping[str, LaurentPoly | int], vars: VarSet | None = None) -> LaurentPoly:
        """Replace variables by polynomials over ``vars``.

        Variables not in ``assignment`` are carried over by name and must exist
        in ``vars``. ``vars`` defaults to the ring of the assigned values, or to
        ``self.vars`` when every value is an int.
        """
        if vars is None:
            rings = {v.vars for v in assignment.values() if isinstance(v, LaurentPoly)}
            if len(rings) > 1:
                raise RingMismatchError("substitution values live over different rings")
            vars = rings.pop() if rings else self.vars
        values = {}
        for name, v in assignment.items():
            self.vars.index(name)
            if isinstance(v, int):
                v = LaurentPoly.const(v, vars)
            _check_same(v.vars, vars)
            values[self.vars.index(name)] = v
        carry = []
        for i, name in enumerate(self.vars.names):
            if i not in values:
                carry.append((i, vars.index(name)))

        cache: dict = {}

        def power(i, k):
            key = (i, k)
            if key not in cache:
                v = values[i]
                if k < 0 and not v.is_unit():
                    raise SubstitutionError(
                        f"cannot substitute {self.vars.names[i]} -> {v} into a negative power"
                    )
                cache[key] = v ** k
            return cache[key]

        width = len(vars)
        result: dict = {}
        for e, c in self.terms.items():
            mono = [0] * width
            for i, j in carry:
                mono[j] += e[i]
            term = LaurentPoly._raw(vars, {tuple(mono): c})
            for i in values:
                if e[i]:
                    term = term * power(i, e[i])
            for te, tc in term.terms.items():
                result[te] = result.get(te, 0) + tc
        return LaurentPoly._raw(vars, {e: c for e, c in result.items() if c})

    # normalization

    def canonical_unit_form(self, distinguished: str | None = None) -> LaurentPoly:
        """Representative of ``self`` modulo multiplication by ``±monomial``.

        The lexicographically smallest exponent vector (``distinguished``
        compared first) is shifted to zero and its coefficient made positive.
        """
        if not self.terms:
            return self
        order = list(range(len(self.vars)))
        if distinguished is not None:
            d = self.vars.index(distinguished)
            order = [d] + [i for i in order if i != d]
        low = min(self.terms, key=lambda e: tuple(e[i] for i in order))
        sign = 1 if self.terms[low] > 0 else -1
        return LaurentPoly._raw(
            self.vars,
            {tuple(x - y for x, y in zip(e, low)): sign * c for e, c in self.terms.items()},
        )

    def equal_up_to_unit(self, other: LaurentPoly, distinguished: str | None = None) -> bool:
        _check_same(self.vars, other.vars)
        return self.canonical_unit_form(distinguished) == other.canonical_unit_form(distinguished)

    # serialization

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.terms.items())

    def to_json_obj(self) -> dict:
        return {
            "vars": list(self.vars.names),
            "terms": [{"e": list(e), "c": c} for e, c in self.sorted_terms()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), ensure_ascii=False)

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> LaurentPoly:
        vars = VarSet(tuple(obj["vars"]))
        terms: dict = {}
        for t in obj["terms"]:
            e = tuple(t["e"])
            if e in terms:
                raise ValidationError(f"duplicate exponent {list(e)} in serialized polynomial")
            terms[e] = t["c"]
        return cls(vars, terms)

    @classmethod
    def from_json(cls, text: str) -> LaurentPoly:
        return cls.from_json_obj(json.loads(text))

    # display

    def format(self, display: str = "t-if-even") -> str:
        names = list(self.vars.names)
        terms = self.terms
        if display == "t-if-even" and "q" in self.vars:
            qi = self.vars.index("q")
            if all(e[qi] % 2 == 0 for e in terms) and "t" not in self.vars:
                names[qi] = "t"
                terms = {e[:qi] + (e[qi] // 2,) + e[qi + 1:]: c for e, c in terms.items()}
        elif display not in ("q", "t-if-even"):
            raise ValidationError(f"unknown display mode {display!r}")
        return format_terms(names, terms)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"LaurentPoly({self.format('q')!r}, vars={list(self.vars.names)})"


def format_terms(names: Sequence[str], terms: Mapping[tuple[int, ...], int]) -> str:
    if not terms:
        return "0"
    parts = []
    for e, c in sorted(terms.items(), reverse=True):
        factors = []
        for name, k in zip(names, e):
            if k == 1:
                factors.append(name)
            elif k:
                factors.append(f"{name}^{k}")
        mono = "*".join(factors)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


class RingMatrix:
    """Dense immutable matrix of :class:`LaurentPoly` over one :class:`VarSet`."""

    __slots__ = ("rows", "cols", "vars", "entries")

    def __init__(self, entries: Sequence[Sequence[LaurentPoly]], vars: VarSet | None = None):
        rows = tuple(tuple(r) for r in entries)
        if not rows or not rows[0]:
            raise ShapeError("matrix must have at least one row and column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ShapeError("ragged matrix rows")
        if vars is None:
            vars = rows[0][0].vars
        for r in rows:
            for x in r:
                _check_same(x.vars, vars)
        self.rows = len(rows)
        self.cols = width
        self.vars = vars
        self.entries = rows

    @classmethod
    def identity(cls, n: int, vars: VarSet) -> RingMatrix:
        one, zero = LaurentPoly.one(vars), LaurentPoly.zero(vars)
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)], vars)

    @classmethod
    def from_ints(cls, rows: Sequence[Sequence[int]], vars: VarSet) -> RingMatrix:
        return cls([[LaurentPoly.const(c, vars) for c in r] for r in rows], vars)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij: tuple[int, int]) -> LaurentPoly:
        """0-based ``(row, col)`` access."""
        i, j = ij
        return self.entries[i][j]

    def entry(self, i: int, j: int) -> LaurentPoly:
        """1-based access, matching the multi-index convention."""
        return self.entries[i - 1][j - 1]

    def __eq__(self, other):
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return self.vars == other.vars and self.entries == other.entries

    def __hash__(self):
        return hash((self.vars, self.entries))

    def __add__(self, other: RingMatrix) -> RingMatrix:
        _check_same(self.vars, other.vars)
        if self.shape != other.shape:
            raise ShapeError(f"cannot add {self.shape} and {other.shape}")
        return RingMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)], self.vars
        )

    def __neg__(self):
        return RingMatrix([[-a for a in r] for r in self.entries], self.vars)

    def __sub__(self, other: RingMatrix) -> RingMatrix:
        return self + (-other)

    def scale(self, c: LaurentPoly | int) -> RingMatrix:
        return RingMatrix([[a * c for a in r] for r in self.entries], self.vars)

    def __matmul__(self, other: RingMatrix) -> RingMatrix:
        _check_same(self.vars, other.vars)
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        zero = LaurentPoly.zero(self.vars)
        cols = list(zip(*other.entries))
        out = []
        for r in self.entries:
            row = []
            for c in cols:
                acc = zero
                for a, b in zip(r, c):
                    if a.terms and b.terms:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return RingMatrix(out, self.vars)

    def transpose(self) -> RingMatrix:
        return RingMatrix(list(zip(*self.entries)), self.vars)

    def map(self, fn) -> RingMatrix:
        out = [[fn(a) for a in r] for r in self.entries]
        return RingMatrix(out, out[0][0].vars)

    def substitute(self, assignment, vars: VarSet | None = None) -> RingMatrix:
        return self.map(lambda a: a.substitute(assignment, vars))

    def submatrix(self, rows: MultiIndex | Iterable[int], cols: MultiIndex | Iterable[int]) -> RingMatrix:
        """Rows and columns are 1-based, strictly increasing."""
        r = _index_list(rows, self.rows)
        c = _index_list(cols, self.cols)
        if not r or not c:
            raise ShapeError("submatrix needs at least one row and one column")
        return RingMatrix([[self.entries[i - 1][j - 1] for j in c] for i in r], self.vars)

    def det(self) -> LaurentPoly:
        if self.rows != self.cols:
            raise ShapeError(f"determinant of non-square {self.shape} matrix")
        return det_entries(self.entries, self.vars)

    def is_identity(self) -> bool:
        return self.rows == self.cols and self == RingMatrix.identity(self.rows, self.vars)

    def to_json_obj(self) -> list:
        return [[a.to_json_obj() for a in r] for r in self.entries]

    @classmethod
    def from_json_obj(cls, rows: list) -> RingMatrix:
        return cls([[LaurentPoly.from_json_obj(a) for a in r] for r in rows])

    def format(self, display: str = "t-if-even") -> str:
        cells = [[a.format(display) for a in r] for r in self.entries]
        width = max(len(c) for r in cells for c in r)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in r) + " ]" for r in cells)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"RingMatrix({self.rows}x{self.cols}, vars={list(self.vars.names)})"


def _index_list(idx, bound: int) -> list[int]:
    if isinstance(idx, MultiIndex):
        elems = list(idx.elems)
    else:
        elems = list(idx)
    for a, b in zip(elems, elems[1:]):
        if a >= b:
            raise ShapeError(f"index list {elems} is not strictly increasing")
    for e in elems:
        if not 1 <= e <= bound:
            raise ShapeError(f"index {e} out of range 1..{bound}")
    return elems


def det_entries(entries: Sequence[Sequence[LaurentPoly]], vars: VarSet) -> LaurentPoly:
    """Determinant by Laplace expansion memoized over column subsets.

    ``partial[mask]`` is the signed sum over all ways of filling the first
    ``popcount(mask)`` rows with the columns in ``mask``; one pass per row,
    so the cost is ``2^n * n`` ring multiplications.
    """
    n = len(entries)
    if n == 0:
        return LaurentPoly.one(vars)
    partial = {0: LaurentPoly.one(vars)}
    for r in range(n):
        row = entries[r]
        nxt: dict = {}
        for mask, acc in partial.items():
            if not acc.terms:
                continue
            for c in range(n):
                bit = 1 << c
                if mask & bit or not row[c].terms:
                    continue
                # columns already used that sit to the right of c
                above = bin(mask >> (c + 1)).count("1")
                term = acc * row[c]
                if above & 1:
                    term = -term
                key = mask | bit
                prev = nxt.get(key)
                nxt[key] = term if prev is None else prev + term
        partial = nxt
    return partial.get((1 << n) - 1, LaurentPoly.zero(vars))
