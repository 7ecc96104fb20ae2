from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .errors import ParseError, ValidationError


@dataclass(frozen=True, order=True)
class MultiIndex:
    """A strictly increasing subset of ``{1..n}``.

    Indexes minors, wedge-basis vectors and idempotent summands.
    """

    n: int
    elems: tuple[int, ...]

    def __post_init__(self):
        elems = tuple(int(e) for e in self.elems)
        object.__setattr__(self, "elems", elems)
        if self.n < 0:
            raise ValidationError(f"ambient size must be >= 0, got {self.n}")
        for a, b in zip(elems, elems[1:]):
            if a >= b:
                raise ValidationError(f"multi-index {list(elems)} is not strictly increasing")
        for e in elems:
            if not 1 <= e <= self.n:
                raise ValidationError(f"index {e} out of range 1..{self.n}")

    @classmethod
    def of(cls, n: int, elems: Iterable[int]) -> MultiIndex:
        return cls(n, tuple(elems))

    @classmethod
    def full(cls, n: int) -> MultiIndex:
        return cls(n, tuple(range(1, n + 1)))

    @classmethod
    def range(cls, n: int, start: int, stop: int) -> MultiIndex:
        """Indices ``start..stop`` inclusive."""
        return cls(n, tuple(range(start, stop + 1)))

    @classmethod
    def parse(cls, n: int, text: str) -> MultiIndex:
        """Parse ``"2,3"`` / ``"2 3"``; an empty string or ``"-"`` is the empty index."""
        stripped = text.strip()
        if stripped in ("", "-", "{}"):
            return cls(n, ())
        stripped = stripped.strip("{}")
        elems = []
        for tok in stripped.replace(",", " ").split():
            try:
                elems.append(int(tok))
            except ValueError:
                raise ParseError(f"bad multi-index entry {tok!r}", text.find(tok)) from None
        return cls(n, tuple(elems))

    def __len__(self) -> int:
        return len(self.elems)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elems)

    def __contains__(self, item) -> bool:
        return item in self.elems

    def complement(self) -> MultiIndex:
        return MultiIndex(self.n, tuple(i for i in range(1, self.n + 1) if i not in self.elems))

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.elems)) + "}"


def subsets(n: int, within: Iterable[int] | None = None) -> list[MultiIndex]:
    """All multi-indices drawn from ``within`` (default ``1..n``), by size then lexicographic."""
    pool = sorted(within) if within is not None else list(range(1, n + 1))
    out = []
    for size in range(len(pool) + 1):
        out.extend(MultiIndex(n, c) for c in combinations(pool, size))
    return out
