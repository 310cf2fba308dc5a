"""Free-product normal form of PSL(2,Z) = <S> * <U>, with S^2 = U^3 = 1.

Syllables are ``"S"``, ``"U"`` and ``"V"`` (``V = U^2``).
"""
from __future__ import annotations

from dataclasses import dataclass

from ..errors import DomainError, InvariantViolation, ParseError
from .matrix import S_MATRIX, U_MATRIX, IntMatrix2, ProjMatrix2

SYLLABLE_MATRICES = {
    "S": ProjMatrix2(S_MATRIX),
    "U": ProjMatrix2(U_MATRIX),
    "V": ProjMatrix2(U_MATRIX * U_MATRIX),
}
SYLLABLE_ORDERS = {"S": 2, "U": 3, "V": 3}

# exponent of U carried by each U-factor syllable
_U_EXP = {"U": 1, "V": 2}
_U_SYL = {1: "U", 2: "V"}


def _factor(syl: str) -> str:
    return "S" if syl == "S" else "U"


@dataclass(frozen=True)
class SyllableWord:
    syllables: tuple[str, ...] = ()

    def __post_init__(self):
        syls = tuple(self.syllables)
        for i, s in enumerate(syls):
            if s not in SYLLABLE_MATRICES:
                raise DomainError(f"unknown syllable {s!r}")
            if i and _factor(syls[i - 1]) == _factor(s):
                raise DomainError(f"adjacent syllables from the same factor at {i}")
        object.__setattr__(self, "syllables", syls)

    def __len__(self) -> int:
        return len(self.syllables)

    def evaluate(self) -> ProjMatrix2:
        result = ProjMatrix2(IntMatrix2(1, 0, 0, 1))
        for s in self.syllables:
            result = result * SYLLABLE_MATRICES[s]
        return result

    def matrices(self) -> list[ProjMatrix2]:
        return [SYLLABLE_MATRICES[s] for s in self.syllables]

    def __str__(self) -> str:
        return "".join(self.syllables) or "e"


def free_product_reduce(letters) -> tuple[str, ...]:
    """Multiply out a sequence of S/U/V letters in Z/2 * Z/3."""
    out: list[str] = []
    for s in letters:
        if not out or _factor(out[-1]) != _factor(s):
            out.append(s)
            continue
        last = out.pop()
        if s == "S":
            continue  # S S = 1
        e = (_U_EXP[last] + _U_EXP[s]) % 3
        if e:
            out.append(_U_SYL[e])
    return tuple(out)


def parse_syllables(text: str) -> SyllableWord:
    s = text.replace(" ", "")
    if s in ("", "e"):
        return SyllableWord()
    for i, ch in enumerate(s):
        if ch not in SYLLABLE_MATRICES:
            raise ParseError("syllables must be S, U or V", text, i)
    try:
        return SyllableWord(tuple(s))
    except DomainError as exc:
        raise ParseError(str(exc), text, 0) from None


def _t_power_letters(k: int) -> list[str]:
    # T = S U and T^-1 = V S in PSL(2,Z)
    return ["S", "U"] * k if k >= 0 else ["V", "S"] * (-k)


def psl_normal_form(g: ProjMatrix2) -> SyllableWord:
    """Alternating S/U/V word evaluating to ``g``.

    Euclid on the first column: write ``g = T^q S g'`` where ``g'`` has a
    strictly smaller ``|c|``, until ``c = 0`` and ``g = T^k``.
    """
    if not isinstance(g, ProjMatrix2):
        raise DomainError(f"psl_normal_form needs a ProjMatrix2, got {type(g).__name__}")
    a, b, c, d = g.entries
    letters: list[str] = []
    steps = 0
    bound = abs(c) + 1
    while c != 0:
        steps += 1
        if steps > bound:
            raise InvariantViolation(f"normal form of {g} did not terminate")
        q = a // c
        a, b = a - q * c, b - q * d
        letters += _t_power_letters(q)
        letters.append("S")
        # S^-1 [[a,b],[c,d]] = [[c,d],[-a,-b]]
        a, b, c, d = c, d, -a, -b
    # now [[a,b],[0,d]] = ±T^(b*d)
    letters += _t_power_letters(b * d)
    word = SyllableWord(free_product_reduce(letters))
    if word.evaluate() != g:
        raise InvariantViolation(f"normal form {word} does not evaluate to {g}")
    return word
