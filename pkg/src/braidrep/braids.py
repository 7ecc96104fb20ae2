"""Braid words over the Artin generators.

A word ``uv`` means ``u`` first, then ``v``. Letter ``i > 0`` is sigma_i and
``i < 0`` its inverse.
"""

from __future__ import annotations

import json
import random
import re
from dataclasses import dataclass

from .errors import ParseError, ValidationError


@dataclass(frozen=True)
class Permutation:
    """Bijection of ``{1..n}``; ``images[i-1]`` is the image of ``i``."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValidationError(f"{list(images)} is not a permutation")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int) -> Permutation:
        """Swap ``i`` and ``i+1``."""
        images = list(range(1, n + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        return cls(tuple(images))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def compose(self, other: Permutation) -> Permutation:
        """``self ∘ other``: apply ``other`` first."""
        return Permutation(tuple(self.images[other.images[i] - 1] for i in range(self.n)))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.n + 1))

    def sign(self) -> int:
        """+1 for even, -1 for odd."""
        seen = [False] * self.n
        s = 1
        for start in range(self.n):
            if seen[start]:
                continue
            length = 0
            i = start
            while not seen[i]:
                seen[i] = True
                i = self.images[i] - 1
                length += 1
            if length % 2 == 0:
                s = -s
        return s


@dataclass(frozen=True)
class BraidWord:
    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        letters = tuple(int(x) for x in self.letters)
        object.__setattr__(self, "letters", letters)
        if self.n < 1:
            raise ValidationError(f"strand count must be >= 1, got {self.n}")
        for x in letters:
            if x == 0 or abs(x) > self.n - 1:
                raise ValidationError(f"letter {x} out of range for B_{self.n}")

    @classmethod
    def identity(cls, n: int) -> BraidWord:
        return cls(n, ())

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        if self.n != other.n:
            raise ValidationError(f"cannot compose braids on {self.n} and {other.n} strands")
        return BraidWord(self.n, self.letters + other.letters)

    def __pow__(self, k: int) -> BraidWord:
        if k < 0:
            return invert(self) ** (-k)
        return BraidWord(self.n, self.letters * k)

    def with_strands(self, n: int) -> BraidWord:
        """The same word viewed in ``B_n`` for ``n >= self.n``."""
        return BraidWord(n, self.letters)

    def to_text(self) -> str:
        return f"{self.n}: " + " ".join(map(str, self.letters)) if self.letters else f"{self.n}:"

    def to_json_obj(self) -> dict:
        return {"n": self.n, "letters": list(self.letters)}

    @classmethod
    def from_json_obj(cls, obj) -> BraidWord:
        return cls(int(obj["n"]), tuple(obj["letters"]))

    def __str__(self):
        return self.to_text()


_ITEM = re.compile(r"[+-]?\d+|,|\S")


def parse_braid(text: str) -> BraidWord:
    """Parse ``"<n>: <letter> <letter> ..."``; commas and spaces both separate.

    A JSON object ``{"n": 3, "letters": [1, -2]}`` is accepted as well.
    """
    if text.lstrip().startswith("{"):
        try:
            return BraidWord.from_json_obj(json.loads(text))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad JSON braid: {exc}", 0) from None

    def offset(i: int) -> int:
        return len(text[:i].encode())

    head = re.match(r"\s*(\d+)\s*:", text)
    if not head:
        raise ParseError("expected '<strands>:'", offset(len(text) - len(text.lstrip())))
    n = int(head.group(1))
    letters = []
    need_letter = False
    for m in _ITEM.finditer(text, head.end()):
        tok = m.group()
        if tok == ",":
            if need_letter or not letters:
                raise ParseError("unexpected ','", offset(m.start()))
            need_letter = True
        elif tok[-1].isdigit():
            letters.append(int(tok))
            need_letter = False
        else:
            raise ParseError(f"unexpected character {tok!r}", offset(m.start()))
    if need_letter:
        raise ParseError("trailing ','", offset(len(text)))
    for x in letters:
        if x == 0 or abs(x) > n - 1:
            raise ValidationError(f"letter {x} out of range for B_{n}")
    return BraidWord(n, tuple(letters))


def invert(w: BraidWord) -> BraidWord:
    return BraidWord(w.n, tuple(-x for x in reversed(w.letters)))


def reflect(w: BraidWord) -> BraidWord:
    """Conjugate by the disk reflection: ``±i -> ±(n-i)``."""
    return BraidWord(w.n, tuple((w.n - abs(x)) * (1 if x > 0 else -1) for x in w.letters))


def exponent(w: BraidWord) -> int:
    return sum(1 if x > 0 else -1 for x in w.letters)


def permutation(w: BraidWord) -> Permutation:
    """Image in ``S_n``; ``permutation(uv) == permutation(u).compose(permutation(v))``.

    Equivalently, the strand label sitting at each position once the word is
    read left to right, starting from the identity labelling.
    """
    labels = list(range(1, w.n + 1))
    for x in w.letters:
        i = abs(x)
        labels[i - 1], labels[i] = labels[i], labels[i - 1]
    return Permutation(tuple(labels))


def is_pure(w: BraidWord) -> bool:
    return permutation(w).is_identity()


def random_word(rng: random.Random, n: int, length: int) -> BraidWord:
    if n < 2:
        return BraidWord(n, ())
    return BraidWord(n, tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length)))


def random_pure_word(rng: random.Random, n: int, pieces: int) -> BraidWord:
    """Product of conjugated generator squares ``u sigma_i^{±2} u^{-1}``."""
    letters: list[int] = []
    for _ in range(pieces):
        u = random_word(rng, n, rng.randint(0, 2))
        g = rng.choice((1, -1)) * rng.randint(1, n - 1)
        letters.extend(u.letters + (g, g) + invert(u).letters)
    return BraidWord(n, tuple(letters))

