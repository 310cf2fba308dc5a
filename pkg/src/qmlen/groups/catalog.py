"""Group instances addressed by tag: ``free:<rank>``, ``sl2z``, ``psl2z``, ``perm:<degree>``."""
from __future__ import annotations

import itertools
from typing import Iterator

from ..errors import DomainError, ParseError
from .free import FreeWord, parse_word
from .matrix import S_MATRIX, T_MATRIX, IntMatrix2, ProjMatrix2, parse_matrix
from .perm import Permutation, parse_permutation


class Group:
    tag: str
    element_type: type

    def identity(self):
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    def format(self, g) -> str:
        self.check(g)
        return str(g)

    def generators(self) -> list:
        """A standard finite generating set (not closed under inverses)."""
        raise NotImplementedError

    def check(self, g) -> None:
        if not isinstance(g, self.element_type) or g.group != self.tag:
            raise DomainError(f"{g!r} is not an element of {self.tag}")

    def __eq__(self, other) -> bool:
        return isinstance(other, Group) and other.tag == self.tag

    def __hash__(self) -> int:
        return hash(self.tag)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.tag!r})"


class FreeGroup(Group):
    element_type = FreeWord

    def __init__(self, rank: int):
        if rank < 1:
            raise DomainError("free group rank must be positive")
        self.rank = rank
        self.tag = f"free:{rank}"

    def identity(self) -> FreeWord:
        return FreeWord(self.rank)

    def parse(self, text: str) -> FreeWord:
        return parse_word(text, self.rank)

    def generators(self) -> list[FreeWord]:
        return [FreeWord(self.rank, (i,)) for i in range(1, self.rank + 1)]


class SL2Z(Group):
    element_type = IntMatrix2
    tag = "sl2z"

    def identity(self) -> IntMatrix2:
        return IntMatrix2(1, 0, 0, 1)

    def parse(self, text: str) -> IntMatrix2:
        return _parse_named_matrix(text)

    def generators(self) -> list[IntMatrix2]:
        return [S_MATRIX, T_MATRIX]


class PSL2Z(Group):
    element_type = ProjMatrix2
    tag = "psl2z"

    def identity(self) -> ProjMatrix2:
        return ProjMatrix2(IntMatrix2(1, 0, 0, 1))

    def parse(self, text: str) -> ProjMatrix2:
        return ProjMatrix2(_parse_named_matrix(text))

    def generators(self) -> list[ProjMatrix2]:
        return [ProjMatrix2(S_MATRIX), ProjMatrix2(T_MATRIX)]


class SymmetricGroup(Group):
    element_type = Permutation

    def __init__(self, degree: int):
        if degree < 1:
            raise DomainError("permutation degree must be positive")
        self.degree = degree
        self.tag = f"perm:{degree}"

    def identity(self) -> Permutation:
        return Permutation.identity_of(self.degree)

    def parse(self, text: str) -> Permutation:
        return parse_permutation(text, self.degree)

    def generators(self) -> list[Permutation]:
        if self.degree == 1:
            return [self.identity()]
        gens = [Permutation.from_cycles(self.degree, [(0, 1)])]
        if self.degree > 2:
            gens.append(Permutation.from_cycles(self.degree, [tuple(range(self.degree))]))
        return gens

    def transpositions(self) -> list[Permutation]:
        return [
            Permutation.from_cycles(self.degree, [(i, j)])
            for i, j in itertools.combinations(range(self.degree), 2)
        ]

    def elements(self, alternating: bool = False) -> Iterator[Permutation]:
        for images in itertools.permutations(range(self.degree)):
            p = Permutation(images)
            if not alternating or p.is_even():
                yield p


_NAMED = {"S": S_MATRIX, "T": T_MATRIX, "I": IntMatrix2(1, 0, 0, 1)}


def _parse_named_matrix(text: str) -> IntMatrix2:
    """A matrix literal, or a product of S, T, T', U, I names like ``"S T T'"``."""
    from .matrix import U_MATRIX

    s = text.strip()
    if s.startswith("["):
        return parse_matrix(s)
    names = dict(_NAMED, U=U_MATRIX)
    result = IntMatrix2(1, 0, 0, 1)
    pos = 0
    tokens = s.replace("*", " ").split()
    if not tokens:
        raise ParseError("empty matrix expression", text, 0)
    for tok in tokens:
        pos = text.find(tok, pos)
        base, inv = (tok[:-1], True) if tok.endswith("'") else (tok, False)
        exp = 1
        if "^" in base:
            base, _, e = base.partition("^")
            try:
                exp = int(e)
            except ValueError:
                raise ParseError("bad exponent", text, pos) from None
        if base not in names:
            raise ParseError(f"unknown matrix name {base!r}", text, pos)
        from .ops import power

        m = power(names[base], -exp if inv else exp)
        result = result * m
        pos += len(tok)
    return result


def parse_group(text: str) -> Group:
    t = text.strip().lower()
    kind, _, arg = t.partition(":")
    try:
        if kind == "free":
            return FreeGroup(int(arg))
        if kind == "perm":
            return SymmetricGroup(int(arg))
    except ValueError:
        raise ParseError("group parameter must be an integer", text, len(kind) + 1) from None
    if t == "sl2z":
        return SL2Z()
    if t == "psl2z":
        return PSL2Z()
    raise ParseError("unknown group; expected free:<rank>, sl2z, psl2z or perm:<degree>", text, 0)


def group_of(g) -> Group:
    return parse_group(g.group)


def format_element(g) -> str:
    return group_of(g).format(g)
