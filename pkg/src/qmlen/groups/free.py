"""Reduced words in a free group of finite rank.

A letter is a nonzero int: ``+i`` is the generator ``a_i`` and ``-i`` its
inverse (generators are 1-based). Words are kept freely reduced at all times.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from ..errors import DomainError, ParseError


def reduce_letters(letters: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


@dataclass(frozen=True)
class FreeWord:
    rank: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 1:
            raise DomainError(f"free group rank must be positive, got {self.rank}")
        letters = tuple(self.letters)
        for x in letters:
            if x == 0 or abs(x) > self.rank:
                raise DomainError(f"letter {x} outside free group of rank {self.rank}")
        object.__setattr__(self, "letters", reduce_letters(letters))

    @classmethod
    def generator(cls, rank: int, i: int, sign: int = 1) -> FreeWord:
        return cls(rank, (sign * i,))

    @property
    def group(self) -> str:
        return f"free:{self.rank}"

    def __len__(self) -> int:
        return len(self.letters)

    def identity(self) -> FreeWord:
        return FreeWord(self.rank)

    def is_identity(self) -> bool:
        return not self.letters

    def __mul__(self, other: FreeWord) -> FreeWord:
        if not isinstance(other, FreeWord) or other.rank != self.rank:
            return NotImplemented
        x, y = self.letters, other.letters
        k = 0
        # cancel the longest suffix of x that is inverse to a prefix of y
        while k < len(x) and k < len(y) and x[len(x) - 1 - k] == -y[k]:
            k += 1
        return FreeWord(self.rank, x[: len(x) - k] + y[k:])

    def inverse(self) -> FreeWord:
        return FreeWord(self.rank, tuple(-x for x in reversed(self.letters)))

    def cyclic_reduction(self) -> tuple[FreeWord, FreeWord]:
        """Return ``(u, c)`` with ``self == u * c * u^-1`` and ``c`` cyclically reduced."""
        w = self.letters
        i, j = 0, len(w)
        while j - i >= 2 and w[i] == -w[j - 1]:
            i += 1
            j -= 1
        return FreeWord(self.rank, w[:i]), FreeWord(self.rank, w[i:j])

    def __str__(self) -> str:
        return format_word(self.letters)


_TOKEN = re.compile(r"\s*a(\d+)(')?(?:\^(-?\d+))?\s*[*.]?")


def format_word(letters: tuple[int, ...]) -> str:
    if not letters:
        return "e"
    return " ".join(f"a{abs(x)}" + ("'" if x < 0 else "") for x in letters)


def parse_word(text: str, rank: int) -> FreeWord:
    """Parse ``"a1 a2' a1^3"``; ``"e"``, ``"1"`` or an empty string is the identity."""
    s = text.strip()
    if s in ("", "e", "1"):
        return FreeWord(rank)
    letters: list[int] = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError("unexpected character in free word", text, pos)
        i = int(m.group(1))
        if i < 1 or i > rank:
            raise ParseError(f"generator a{i} outside rank {rank}", text, pos)
        sign = -1 if m.group(2) else 1
        exp = int(m.group(3)) if m.group(3) is not None else 1
        if exp < 0:
            sign, exp = -sign, -exp
        letters.extend([sign * i] * exp)
        pos = m.end()
    return FreeWord(rank, tuple(letters))
