"""SL(2,Z) and PSL(2,Z) with exact Python integers."""
from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import DomainError, ParseError


@dataclass(frozen=True)
class IntMatrix2:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        for v in (self.a, self.b, self.c, self.d):
            if not isinstance(v, int) or isinstance(v, bool):
                raise DomainError(f"matrix entries must be integers, got {v!r}")
        if self.a * self.d - self.b * self.c != 1:
            raise DomainError(f"determinant of {self} is not 1")

    @classmethod
    def identity_matrix(cls) -> IntMatrix2:
        return cls(1, 0, 0, 1)

    @property
    def group(self) -> str:
        return "sl2z"

    @property
    def entries(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    @property
    def trace(self) -> int:
        return self.a + self.d

    def identity(self) -> IntMatrix2:
        return IntMatrix2(1, 0, 0, 1)

    def is_identity(self) -> bool:
        return self.entries == (1, 0, 0, 1)

    def __mul__(self, other: IntMatrix2) -> IntMatrix2:
        if not isinstance(other, IntMatrix2):
            return NotImplemented
        a, b, c, d = self.entries
        e, f, g, h = other.entries
        return IntMatrix2(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def __neg__(self) -> IntMatrix2:
        return IntMatrix2(-self.a, -self.b, -self.c, -self.d)

    def inverse(self) -> IntMatrix2:
        return IntMatrix2(self.d, -self.b, -self.c, self.a)

    def size(self) -> int:
        return abs(self.a) + abs(self.b) + abs(self.c) + abs(self.d)

    def __str__(self) -> str:
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"


def _sign_canonical(m: IntMatrix2) -> IntMatrix2:
    for v in m.entries:
        if v:
            return m if v > 0 else -m
    raise AssertionError("zero matrix cannot have determinant 1")


@dataclass(frozen=True)
class ProjMatrix2:
    """Class of ``rep`` modulo ``±I``; ``rep`` has its first nonzero entry positive."""

    rep: IntMatrix2

    def __post_init__(self):
        if not isinstance(self.rep, IntMatrix2):
            raise DomainError(f"ProjMatrix2 needs an IntMatrix2, got {self.rep!r}")
        object.__setattr__(self, "rep", _sign_canonical(self.rep))

    @classmethod
    def of(cls, a: int, b: int, c: int, d: int) -> ProjMatrix2:
        return cls(IntMatrix2(a, b, c, d))

    @property
    def group(self) -> str:
        return "psl2z"

    @property
    def entries(self) -> tuple[int, int, int, int]:
        return self.rep.entries

    @property
    def trace(self) -> int:
        """Trace of the canonical representative (only ``|trace|`` is well defined)."""
        return self.rep.trace

    def identity(self) -> ProjMatrix2:
        return ProjMatrix2(IntMatrix2(1, 0, 0, 1))

    def is_identity(self) -> bool:
        return self.rep.is_identity()

    def __mul__(self, other: ProjMatrix2) -> ProjMatrix2:
        if not isinstance(other, ProjMatrix2):
            return NotImplemented
        return ProjMatrix2(self.rep * other.rep)

    def inverse(self) -> ProjMatrix2:
        return ProjMatrix2(self.rep.inverse())

    def size(self) -> int:
        return self.rep.size()

    def __str__(self) -> str:
        return str(self.rep)


def project(m: IntMatrix2) -> ProjMatrix2:
    return ProjMatrix2(m)


_MATRIX = re.compile(
    r"\s*\[\s*\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\]\s*,\s*\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\]\s*\]\s*$"
)


def parse_matrix(text: str) -> IntMatrix2:
    """Parse ``"[[a,b],[c,d]]"`` (also accepts the unicode minus sign)."""
    norm = text.replace("−", "-")
    m = _MATRIX.match(norm)
    if not m:
        pos = 0
        # point at the first character that cannot continue a matrix literal
        for pos, ch in enumerate(norm):
            if ch not in "[],-0123456789 \t":
                break
        else:
            pos = len(norm)
        raise ParseError("malformed matrix, expected [[a,b],[c,d]]", text, pos)
    a, b, c, d = (int(g) for g in m.groups())
    if a * d - b * c != 1:
        raise ParseError(f"determinant is {a * d - b * c}, not 1", text, 0)
    return IntMatrix2(a, b, c, d)


# Standard generators.
S_MATRIX = IntMatrix2(0, -1, 1, 0)
T_MATRIX = IntMatrix2(1, 1, 0, 1)
U_MATRIX = IntMatrix2(0, -1, 1, 1)
