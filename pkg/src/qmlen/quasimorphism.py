"""Quasimorphisms on the concrete groups, homogenization with certified error,
and empirical defect search.

Everything is exact: values are ``int`` or ``Fraction``; no floats.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence, Union

from .errors import DomainError, InvariantViolation, ResourceError
from .groups import (
    FreeGroup,
    FreeWord,
    Group,
    IntMatrix2,
    ProjMatrix2,
    multiply,
    parse_group,
    power,
)

Rational = Union[int, Fraction]


def dedekind_sum(d: int, c: int) -> Fraction:
    """Dedekind sum ``s(d, c)`` via the reciprocity law (Euclid-style, O(log c))."""
    if c <= 0:
        raise DomainError(f"dedekind_sum needs c >= 1, got {c}")
    g = math.gcd(d, c)
    a, b = (d // g) % (c // g), c // g
    total = Fraction(0)
    sign = 1
    # s(a,b) = (a^2 + b^2 + 1)/(12ab) - 1/4 - s(b mod a, a) for coprime 0 < a < b
    while a:
        total += sign * (Fraction(a * a + b * b + 1, 12 * a * b) - Fraction(1, 4))
        sign = -sign
        a, b = b % a, a
    return total


def _as_sl2(m: Union[IntMatrix2, ProjMatrix2]) -> IntMatrix2:
    if isinstance(m, ProjMatrix2):
        return m.rep
    if isinstance(m, IntMatrix2):
        return m
    raise DomainError(f"expected a 2x2 integer matrix, got {type(m).__name__}")


def dedekind_phi(m: Union[IntMatrix2, ProjMatrix2]) -> Fraction:
    """Rademacher's Phi; invariant under ``M -> -M`` so it is defined on PSL(2,Z) too."""
    a, b, c, d = _as_sl2(m).entries
    if c == 0:
        return Fraction(b, d)
    sign = 1 if c > 0 else -1
    return Fraction(a + d, c) - 12 * sign * dedekind_sum(d, abs(c))


def phi_cocycle_defect(A, B) -> Fraction:
    """``Phi(AB) - Phi(A) - Phi(B)``; always one of -3, 0, 3."""
    value = dedekind_phi(multiply(A, B)) - dedekind_phi(A) - dedekind_phi(B)
    if value not in (-3, 0, 3):
        raise InvariantViolation(f"Phi cocycle on {A}, {B} is {value}, not in {{-3,0,3}}")
    return value


def _count(pattern: tuple[int, ...], text: tuple[int, ...]) -> int:
    k = len(pattern)
    return sum(1 for i in range(len(text) - k + 1) if text[i : i + k] == pattern)


def brooks_value(w: FreeWord, g: FreeWord) -> int:
    """Overlapping occurrences of ``w`` in ``g`` minus those of ``w^-1``."""
    if w.is_identity():
        raise DomainError("Brooks counting word must be nonempty")
    if w.rank != g.rank:
        raise DomainError(f"counting word in free:{w.rank}, element in free:{g.rank}")
    return _count(w.letters, g.letters) - _count(w.inverse().letters, g.letters)


def _cyclic_count(pattern: tuple[int, ...], cyc: tuple[int, ...]) -> int:
    L, k = len(cyc), len(pattern)
    reps = -(-(k + L) // L)
    unrolled = cyc * reps
    return sum(1 for i in range(L) if unrolled[i : i + k] == pattern)


def brooks_homogeneous(w: FreeWord, g: FreeWord) -> int:
    """Exact homogenization of ``brooks_value(w, .)`` at ``g``.

    ``g^n`` of a cyclically reduced ``g`` is ``g`` repeated, so the limit is
    the signed count of occurrences of ``w`` in the cyclic word of ``g``.
    """
    if w.is_identity():
        raise DomainError("Brooks counting word must be nonempty")
    _, cyc = g.cyclic_reduction()
    if cyc.is_identity():
        return 0
    return _cyclic_count(w.letters, cyc.letters) - _cyclic_count(w.inverse().letters, cyc.letters)


def brooks_defect_upper(w: FreeWord) -> int:
    """Declared defect ``2(2|w| - 3)``; zero for a single letter (a homomorphism)."""
    return max(0, 2 * (2 * len(w) - 3))


@dataclass(frozen=True)
class CertifiedValue:
    """An exact interval ``[lo, hi]`` guaranteed to contain the true value.

    ``n_used`` is ``None`` for exact formulas and the power used for limit
    estimates.
    """

    lo: Fraction
    hi: Fraction
    n_used: Optional[int] = None

    def __post_init__(self):
        lo, hi = Fraction(self.lo), Fraction(self.hi)
        if lo > hi:
            raise DomainError(f"empty interval [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @classmethod
    def exact(cls, value: Rational) -> CertifiedValue:
        return cls(Fraction(value), Fraction(value))

    @property
    def provenance(self) -> str:
        return "exact" if self.n_used is None else f"limit(n={self.n_used})"

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x: Rational) -> bool:
        return self.lo <= x <= self.hi

    def excludes_zero(self) -> bool:
        return self.lo > 0 or self.hi < 0

    def abs_low(self) -> Fraction:
        """Smallest possible ``|value|``."""
        if self.lo >= 0:
            return self.lo
        if self.hi <= 0:
            return -self.hi
        return Fraction(0)


@dataclass(frozen=True)
class Quasimorphism:
    """A real-valued map on one group with a declared defect upper bound.

    ``evaluate`` is ``None`` for homogenizations known only through certified
    limits; then ``base`` is the quasimorphism being homogenized.
    """

    id: str
    group: str
    evaluate: Optional[Callable]
    defect_upper: Fraction
    homogeneous: bool
    base: Optional["Quasimorphism"] = None

    def __call__(self, g) -> Fraction:
        if g.group != self.group:
            raise DomainError(f"{self.id} is defined on {self.group}, not {g.group}")
        if self.evaluate is None:
            raise DomainError(f"{self.id} has no exact formula; use certify()")
        return Fraction(self.evaluate(g))

    def certify(self, g, width: Rational = Fraction(1, 64)) -> CertifiedValue:
        if self.base is not None:
            return homogenize(self.base, g, width)
        if not self.homogeneous:
            raise DomainError(f"{self.id} is not homogeneous; certify its homogenization")
        return CertifiedValue.exact(self(g))

    def homogenization(self) -> Quasimorphism:
        if self.homogeneous:
            return self
        return Quasimorphism(
            id=f"homogenized:{self.id}",
            group=self.group,
            evaluate=None,
            defect_upper=2 * self.defect_upper,
            homogeneous=True,
            base=self,
        )


def homogenize(
    f: Quasimorphism, g, target_width: Optional[Rational] = None, *, n: Optional[int] = None
) -> CertifiedValue:
    """Certified interval for ``lim f(g^k)/k`` from a single power ``g^n``.

    Uses ``|phi(g) - f(g^n)/n| <= D(f)/n``. Either ``target_width`` (the
    smallest ``n`` with ``2D/n <= target_width`` is used) or ``n`` must be given.
    """
    if f.evaluate is None:
        raise DomainError(f"{f.id} cannot be evaluated exactly")
    D = Fraction(f.defect_upper)
    if n is None:
        if target_width is None:
            raise DomainError("give target_width or n")
        target_width = Fraction(target_width)
        if target_width <= 0:
            raise DomainError(f"target_width must be positive, got {target_width}")
        n = max(1, math.ceil(2 * D / target_width))
    elif n < 1:
        raise DomainError(f"n must be positive, got {n}")
    mid = f(power(g, n)) / n
    return CertifiedValue(mid - D / n, mid + D / n, n_used=n)


DEDEKIND_PHI_DEFECT = Fraction(3)
# Homogenizing at most doubles the defect, and the value 6 is attained.
RADEMACHER_DEFECT = Fraction(6)


def rademacher(g: Union[IntMatrix2, ProjMatrix2]) -> int:
    """Integer-valued homogenization of Phi (the Rademacher symbol)."""
    _as_sl2(g)
    interval = homogenize(_PHI_SL, _as_sl2(g), Fraction(1, 2))
    lo, hi = math.ceil(interval.lo), math.floor(interval.hi)
    if lo != hi:
        raise InvariantViolation(
            f"homogenized Phi of {g} lies in [{interval.lo}, {interval.hi}], "
            f"which holds {max(0, hi - lo + 1)} integers"
        )
    return lo


_PHI_SL = Quasimorphism("dedekind-phi", "sl2z", dedekind_phi, DEDEKIND_PHI_DEFECT, False)


def _symmetrize(generators: Sequence) -> list:
    out = []
    for s in generators:
        for x in (s, s.inverse()):
            if x not in out:
                out.append(x)
    return out


def defect_search(
    f: Quasimorphism, generators: Sequence, radius: int, *, cap: int = 1 << 14
) -> Fraction:
    """Max of ``|f(xy) - f(x) - f(y)|`` over the radius ball (inverses included).

    This is a certified lower bound for the true defect and must not exceed
    ``f.defect_upper``. If the ball outgrows ``cap`` elements, the max over the
    last complete radius is raised inside ``ResourceError.partial``.
    """
    from .lengths import GeneratingSet, ball

    if radius < 1:
        raise DomainError("radius must be >= 1")
    S = GeneratingSet(_symmetrize(generators), label="defect-search")
    complete = True
    try:
        elements = list(ball(S, radius, cap=cap))
    except ResourceError as exc:
        complete = False
        elements = list(exc.partial["ball"])
    values = {x: f(x) for x in elements}
    best = Fraction(0)
    for x in elements:
        fx = values[x]
        for y in elements:
            dev = abs(f(x * y) - fx - values[y])
            if dev > best:
                best = dev
    if best > f.defect_upper:
        raise InvariantViolation(
            f"{f.id}: observed defect {best} exceeds declared bound {f.defect_upper}"
        )
    if not complete:
        raise ResourceError(
            f"ball exceeded {cap} elements; defect lower bound {best} from the partial ball",
            partial=best,
        )
    return best


def get_quasimorphism(qm_id: str, group: Union[Group, str]) -> Quasimorphism:
    """Registry: ``dedekind-phi``, ``rademacher``, ``brooks:<word>``, ``brooks-hom:<word>``."""
    G = parse_group(group) if isinstance(group, str) else group
    if qm_id in ("dedekind-phi", "rademacher"):
        if G.tag not in ("sl2z", "psl2z"):
            raise DomainError(f"{qm_id} is defined on sl2z/psl2z, not {G.tag}")
        if qm_id == "dedekind-phi":
            return Quasimorphism(qm_id, G.tag, dedekind_phi, DEDEKIND_PHI_DEFECT, False)
        return Quasimorphism(qm_id, G.tag, rademacher, RADEMACHER_DEFECT, True)
    kind, sep, word = qm_id.partition(":")
    if sep and kind in ("brooks", "brooks-hom"):
        if not isinstance(G, FreeGroup):
            raise DomainError(f"{kind} is defined on free groups, not {G.tag}")
        w = G.parse(word)
        if w.is_identity():
            raise DomainError("Brooks counting word must be nonempty")
        D = Fraction(brooks_defect_upper(w))
        canonical = f"{kind}:{w}"
        if kind == "brooks":
            return Quasimorphism(canonical, G.tag, lambda g: brooks_value(w, g), D, False)
        return Quasimorphism(canonical, G.tag, lambda g: brooks_homogeneous(w, g), 2 * D, True)
    raise DomainError(f"unknown quasimorphism id {qm_id!r}")


def format_rational(x: Rational) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    if not isinstance(text, str):
        raise DomainError(f"expected a 'p/q' string, got {text!r}")
    try:
        return Fraction(text)
    except ValueError:
        raise DomainError(f"not an exact rational: {text!r}") from None
