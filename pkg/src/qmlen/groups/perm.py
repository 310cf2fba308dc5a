"""Permutations of {0, ..., m-1}, composed right-to-left like functions."""
from __future__ import annotations

import re
from dataclasses import dataclass
from math import lcm
from typing import Sequence

from ..errors import DomainError, ParseError


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        if sorted(images) != list(range(len(images))):
            raise DomainError(f"not a bijection on 0..{len(images) - 1}: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity_of(cls, degree: int) -> Permutation:
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Sequence[Sequence[int]]) -> Permutation:
        """Product of the given cycles, rightmost applied first."""
        result = cls.identity_of(degree)
        for cyc in cycles:
            img = list(range(degree))
            for k, p in enumerate(cyc):
                if not 0 <= p < degree:
                    raise DomainError(f"point {p} outside degree {degree}")
                img[p] = cyc[(k + 1) % len(cyc)]
            if len(set(cyc)) != len(cyc):
                raise DomainError(f"repeated point in cycle {tuple(cyc)}")
            result = result * cls(tuple(img))
        return result

    @property
    def degree(self) -> int:
        return len(self.images)

    @property
    def group(self) -> str:
        return f"perm:{self.degree}"

    def identity(self) -> Permutation:
        return Permutation.identity_of(self.degree)

    def is_identity(self) -> bool:
        return all(i == p for i, p in enumerate(self.images))

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: Permutation) -> Permutation:
        # (x*y)(p) = x(y(p))
        if not isinstance(other, Permutation) or other.degree != self.degree:
            return NotImplemented
        mine = self.images
        return Permutation(tuple(mine[q] for q in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for p, q in enumerate(self.images):
            inv[q] = p
        return Permutation(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            p = self.images[start]
            while p != start:
                cyc.append(p)
                seen[p] = True
                p = self.images[p]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        lengths = [len(c) for c in self.cycles()]
        lengths += [1] * (self.degree - sum(lengths))
        return tuple(sorted(lengths, reverse=True))

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def is_even(self) -> bool:
        return self.sign() == 1

    def cycle_order(self) -> int:
        return lcm(1, *(len(c) for c in self.cycles()))

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


_CYCLE = re.compile(r"\s*\(([^()]*)\)\s*")


def parse_permutation(text: str, degree: int) -> Permutation:
    """Cycle notation, e.g. ``"(0 1 2)(3 4)"``; ``"()"``, ``"e"`` is the identity.

    Several cycles are multiplied right-to-left, so non-disjoint input like
    ``"(0 1)(1 2)"`` is allowed and means the product.
    """
    if text.strip() in ("", "e", "()"):
        return Permutation.identity_of(degree)
    cycles = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _CYCLE.match(text, pos)
        if not m:
            raise ParseError("expected '(' starting a cycle", text, pos)
        body = m.group(1).replace(",", " ").split()
        try:
            cyc = [int(p) for p in body]
        except ValueError:
            raise ParseError("non-integer point in cycle", text, m.start(1)) from None
        if any(not 0 <= p < degree for p in cyc):
            raise ParseError(f"point outside 0..{degree - 1}", text, m.start(1))
        if len(set(cyc)) != len(cyc):
            raise ParseError("repeated point in cycle", text, m.start(1))
        cycles.append(cyc)
        pos = m.end()
    return Permutation.from_cycles(degree, cycles)
