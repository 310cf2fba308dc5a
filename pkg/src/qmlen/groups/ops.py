"""Group operations that dispatch on the element type."""
from __future__ import annotations

from typing import Optional, Union

from ..errors import DomainError, InvariantViolation
from .free import FreeWord
from .matrix import IntMatrix2, ProjMatrix2
from .perm import Permutation

GroupElement = Union[FreeWord, IntMatrix2, ProjMatrix2, Permutation]

_ELEMENT_TYPES = (FreeWord, IntMatrix2, ProjMatrix2, Permutation)


def _check(x) -> None:
    if not isinstance(x, _ELEMENT_TYPES):
        raise DomainError(f"not a supported group element: {x!r}")


def same_group(x: GroupElement, y: GroupElement) -> None:
    _check(x)
    _check(y)
    if type(x) is not type(y) or x.group != y.group:
        raise DomainError(f"elements of different groups: {x.group} vs {y.group}")


def multiply(x: GroupElement, y: GroupElement) -> GroupElement:
    same_group(x, y)
    return x * y


def inverse(g: GroupElement) -> GroupElement:
    _check(g)
    return g.inverse()


def identity_like(g: GroupElement) -> GroupElement:
    _check(g)
    return g.identity()


def product(factors, identity: GroupElement) -> GroupElement:
    result = identity
    for f in factors:
        result = multiply(result, f)
    return result


def power(g: GroupElement, n: int) -> GroupElement:
    """``g**n`` by repeated squaring; negative ``n`` inverts first."""
    _check(g)
    if n < 0:
        g, n = g.inverse(), -n
    result = g.identity()
    base = g
    while n:
        if n & 1:
            result = result * base
        n >>= 1
        if n:
            base = base * base
    return result


def commutator(x: GroupElement, y: GroupElement) -> GroupElement:
    """``x y x^-1 y^-1``."""
    same_group(x, y)
    return x * y * x.inverse() * y.inverse()


def conjugate(h: GroupElement, g: GroupElement) -> GroupElement:
    """``h g h^-1``."""
    same_group(h, g)
    return h * g * h.inverse()


def _order_by_powering(g: GroupElement, bound: int) -> Optional[int]:
    x = g
    for k in range(1, bound + 1):
        if x.is_identity():
            return k
        x = x * g
    return None


def _sl2_order_from_trace(m: IntMatrix2) -> Optional[int]:
    t = m.trace
    if t == 0:
        return 4
    if t == 1:
        return 6
    if t == -1:
        return 3
    if t == 2:
        return 1 if m.is_identity() else None
    if t == -2:
        return 2 if m.entries == (-1, 0, 0, -1) else None
    return None


def _psl2_order_from_trace(m: ProjMatrix2) -> Optional[int]:
    t = abs(m.trace)
    if t == 0:
        return 2
    if t == 1:
        return 3
    if t == 2:
        return 1 if m.is_identity() else None
    return None


def order(g: GroupElement) -> Optional[int]:
    """Exact order of ``g``, or ``None`` when ``g`` has infinite order.

    Matrix orders are computed twice (bounded powering and trace
    classification) and must agree.
    """
    _check(g)
    if isinstance(g, FreeWord):
        return 1 if g.is_identity() else None
    if isinstance(g, Permutation):
        return g.cycle_order()
    if isinstance(g, IntMatrix2):
        by_power, by_trace = _order_by_powering(g, 12), _sl2_order_from_trace(g)
    else:
        by_power, by_trace = _order_by_powering(g, 6), _psl2_order_from_trace(g)
    if by_power != by_trace:
        raise InvariantViolation(
            f"order of {g}: powering gives {by_power}, trace gives {by_trace}"
        )
    return by_power


def is_torsion(g: GroupElement) -> bool:
    return order(g) is not None
