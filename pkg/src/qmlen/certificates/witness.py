"""Factorization witnesses: explicit upper-bound certificates for S-lengths."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from ..errors import DomainError, InvariantViolation
from ..groups import (
    IntMatrix2,
    ProjMatrix2,
    commutator,
    conjugate,
    order,
    power,
    project,
)
from ..groups.ops import same_group


@dataclass(frozen=True)
class TorsionOfOrder:
    order: int

    def __str__(self) -> str:
        return f"TorsionOfOrder({self.order})"


@dataclass(frozen=True)
class CommutatorOf:
    x: object
    y: object

    def __str__(self) -> str:
        return f"CommutatorOf({self.x}, {self.y})"


Claim = Union[TorsionOfOrder, CommutatorOf]


@dataclass(frozen=True)
class Factor:
    element: object
    claim: Claim


@dataclass(frozen=True)
class FactorizationWitness:
    target: object
    factors: tuple[Factor, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))

    def __len__(self) -> int:
        return len(self.factors)

    @property
    def group(self) -> str:
        return self.target.group


def witness_failure(w: FactorizationWitness) -> Optional[str]:
    """First failing invariant of ``w`` as a message, or ``None`` if it verifies.

    The product is checked before the per-factor claims.
    """
    for i, f in enumerate(w.factors):
        try:
            same_group(w.target, f.element)
            if isinstance(f.claim, CommutatorOf):
                same_group(f.claim.x, f.element)
                same_group(f.claim.y, f.element)
        except DomainError as exc:
            return f"group mismatch at index {i}: {exc}"
    prod = w.target.identity()
    for f in w.factors:
        prod = prod * f.element
    if prod != w.target:
        return f"product mismatch: factors multiply to {prod}, target is {w.target}"
    for i, f in enumerate(w.factors):
        claim = f.claim
        if isinstance(claim, TorsionOfOrder):
            actual = order(f.element)
            if actual != claim.order:
                shown = "infinite" if actual is None else actual
                return f"order claim failed at index {i}: claimed {claim.order}, actual {shown}"
        elif isinstance(claim, CommutatorOf):
            if commutator(claim.x, claim.y) != f.element:
                return f"commutator claim failed at index {i}"
        else:
            return f"unknown claim at index {i}: {claim!r}"
    return None


def verify_witness(w: FactorizationWitness) -> bool:
    return witness_failure(w) is None


def _checked(w: FactorizationWitness) -> FactorizationWitness:
    problem = witness_failure(w)
    if problem:
        raise InvariantViolation(f"constructed witness does not verify: {problem}")
    return w


def involution_power_witness(s, t, n: int) -> FactorizationWitness:
    """Two-involution factorization of ``(s t)^n``.

    With ``g = s t`` and ``alpha = g^(m-1) s``:
    ``g^(2m) = (alpha t alpha^-1) . t`` and
    ``g^(2m+1) = (alpha t alpha^-1) . (t s t^-1)``.
    Negative ``n`` uses ``g^-1 = t s``.
    """
    same_group(s, t)
    if order(s) != 2 or order(t) != 2:
        raise DomainError("involution_power_witness needs s and t of order 2")
    if n == 0:
        raise DomainError("exponent must be nonzero")
    target = power(s * t, n)
    if n < 0:
        s, t, n = t, s, -n
    g = s * t
    m, odd = divmod(n, 2)
    alpha = power(g, m - 1) * s
    first = conjugate(alpha, t)
    second = conjugate(t, s) if odd else t
    return _checked(
        FactorizationWitness(
            target, (Factor(first, TorsionOfOrder(2)), Factor(second, TorsionOfOrder(2)))
        )
    )


EXAMPLE_G = IntMatrix2(2, 1, 1, 1)
EXAMPLE_A = IntMatrix2(0, 1, -1, 0)
EXAMPLE_B = IntMatrix2(-1, -1, 2, 1)
MINUS_I = IntMatrix2(-1, 0, 0, -1)


def lift_projective_witness(pw: FactorizationWitness, target: IntMatrix2) -> FactorizationWitness:
    """Lift a torsion witness in PSL(2,Z) to one for ``target`` in SL(2,Z).

    Factors lift to their sign-canonical representatives; if those multiply to
    ``-target`` the factor ``-I`` is appended last.
    """
    if project(target) != pw.target:
        raise DomainError(f"{target} does not project to {pw.target}")
    factors = []
    prod = IntMatrix2(1, 0, 0, 1)
    for f in pw.factors:
        if not isinstance(f.claim, TorsionOfOrder):
            raise DomainError("only torsion witnesses can be lifted")
        lift = f.element.rep
        m = order(lift)
        if m is None:
            raise InvariantViolation(f"lift {lift} of a torsion element has infinite order")
        factors.append(Factor(lift, TorsionOfOrder(m)))
        prod = prod * lift
    if prod == -target:
        factors.append(Factor(MINUS_I, TorsionOfOrder(2)))
    elif prod != target:
        raise InvariantViolation(f"lifted product {prod} is not ±{target}")
    return _checked(FactorizationWitness(target, tuple(factors)))


def sl2z_example_witness(n: int) -> FactorizationWitness:
    """At most three torsion factors for ``[[2,1],[1,1]]^n`` in SL(2,Z)."""
    if n == 0:
        raise DomainError("exponent must be nonzero")
    pw = involution_power_witness(project(EXAMPLE_A), project(EXAMPLE_B), n)
    return lift_projective_witness(pw, power(EXAMPLE_G, n))


def twist_commutator_witness(f, t, n: int) -> FactorizationWitness:
    """``g^n = [f^-1, t^n]`` for ``g = (f^-1 t f) t^-1`` when ``f^-1 t f`` commutes with ``t``."""
    same_group(f, t)
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    f_inv = f.inverse()
    moved = conjugate(f_inv, t)
    if not commutator(moved, t).is_identity():
        raise DomainError("f^-1 t f does not commute with t")
    g = moved * t.inverse()
    t_n = power(t, n)
    return _checked(
        FactorizationWitness(power(g, n), (Factor(commutator(f_inv, t_n), CommutatorOf(f_inv, t_n)),))
    )


def projective_torsion_witness(g: ProjMatrix2) -> FactorizationWitness:
    """Witness whose factors are the syllables of the free-product normal form."""
    from ..groups.normal_form import SYLLABLE_ORDERS, psl_normal_form

    word = psl_normal_form(g)
    factors = tuple(
        Factor(m, TorsionOfOrder(SYLLABLE_ORDERS[s])) for s, m in zip(word.syllables, word.matrices())
    )
    return _checked(FactorizationWitness(g, factors))
