"""Lower-bound certificates from homogeneous quasimorphisms.

Writing ``|phi|`` for the low end of the certified ``|phi(g)|`` interval,
``D`` for the declared defect and ``C`` for ``sup |phi|`` on S:

    Eq3   l_S(g^n)  >= (n|phi| + D) / (C + D)
    Eq4   ||g||_S   >= |phi| / (C + D)
    Eq5   c(g^n)    >= (n|phi|/D + 1) / 2          (C = D on commutators)
    Eq6   ||g||_C   >= |phi| / 2D
    Eq7   t(g^n)    >= n|phi|/D + 1                (C = 0 on torsion)
    Eq8   ||g||_T   >= |phi| / D
    Thm31 c(g^n)    >= 1 + nk / (6(3h - 1))        (k disjoint Dehn twists, genus h)
    Cor32 ||g||_T   >= k / (3(3h - 1))
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from ..errors import DomainError, InvariantViolation, NoCertificateError
from ..groups import format_element, power, product
from ..quasimorphism import CertifiedValue, Quasimorphism

LENGTH_TAGS = ("Eq3", "Eq5", "Eq7", "Thm31")
STABLE_TAGS = ("Eq4", "Eq6", "Eq8", "Cor32")
QM_TAGS = ("Eq3", "Eq4", "Eq5", "Eq6", "Eq7", "Eq8")

_QUANTITY = {
    "Eq3": "length",
    "Eq4": "stable-length",
    "Eq5": "comm-length",
    "Eq6": "stable-comm",
    "Eq7": "torsion-length",
    "Eq8": "stable-torsion",
    "Thm31": "comm-length",
    "Cor32": "stable-torsion",
}


@dataclass(frozen=True)
class Quantity:
    kind: str
    n: Optional[int] = None
    s_label: Optional[str] = None

    def __str__(self) -> str:
        name = {"length": "l", "comm-length": "c", "torsion-length": "t"}.get(self.kind)
        if name is not None:
            sub = f"_{self.s_label}" if self.s_label else ""
            return f"{name}{sub}(g^{self.n})"
        label = {"stable-length": self.s_label or "S", "stable-comm": "C", "stable-torsion": "T"}
        return f"||g||_{label[self.kind]}"


@dataclass(frozen=True)
class BoundCertificate:
    """``quantity >= bound``, re-derivable from ``inputs`` by the ``inequality`` formula.

    ``inputs`` maps names to ints, Fractions, strings or None. Length-valued
    bounds also carry ``ceiling``.
    """

    quantity: Quantity
    bound: Fraction
    inequality: str
    inputs: dict = field(default_factory=dict)
    ceiling: Optional[int] = None


def _abs_low(phig: CertifiedValue) -> Fraction:
    if not phig.excludes_zero():
        raise NoCertificateError(
            f"phi(g) interval [{phig.lo}, {phig.hi}] contains 0; the method gives no bound"
        )
    return phig.abs_low()


def evaluate_formula(tag: str, inputs: dict) -> Fraction:
    """The bound for ``tag`` from its recorded inputs."""
    if tag in ("Thm31", "Cor32"):
        h, k = inputs["h"], inputs["k"]
        if tag == "Thm31":
            return 1 + Fraction(inputs["n"] * k, 6 * (3 * h - 1))
        return Fraction(k, 3 * (3 * h - 1))
    if tag not in QM_TAGS:
        raise DomainError(f"unknown inequality tag {tag!r}")
    phi = _abs_low(CertifiedValue(inputs["phi_lo"], inputs["phi_hi"], inputs.get("phi_n")))
    D = Fraction(inputs["defect"])
    C = Fraction(inputs["c_upper"])
    n = inputs.get("n")
    if tag == "Eq3":
        if C + D == 0:
            raise DomainError("C + D = 0: no factorization exists, the length is infinite")
        return (n * phi + D) / (C + D)
    if tag == "Eq4":
        if C + D == 0:
            raise DomainError("C + D = 0: no factorization exists, the length is infinite")
        return phi / (C + D)
    if D == 0:
        raise DomainError("defect 0 with phi(g) != 0: g^n is not such a product at all")
    if tag == "Eq5":
        return (n * phi / D + 1) / 2
    if tag == "Eq6":
        return phi / (2 * D)
    if tag == "Eq7":
        return n * phi / D + 1
    return phi / D


def _qm_certificate(phi, phig, n, tag, c_upper, element, s_label) -> BoundCertificate:
    if not isinstance(phi, Quasimorphism) or not phi.homogeneous:
        raise DomainError("bound certificates need a homogeneous quasimorphism")
    _abs_low(phig)
    D = Fraction(phi.defect_upper)
    if tag in ("Eq5", "Eq6"):
        C = D
    elif tag in ("Eq7", "Eq8"):
        C = Fraction(0)
    else:
        if c_upper is None or Fraction(c_upper) < 0:
            raise DomainError(f"{tag} needs a nonnegative C(phi, S) upper bound")
        C = Fraction(c_upper)
    inputs = {
        "qm": phi.id,
        "element": None if element is None else format_element(element),
        "group": None if element is None else element.group,
        "phi_lo": phig.lo,
        "phi_hi": phig.hi,
        "phi_n": phig.n_used,
        "defect": D,
        "c_upper": C,
        "n": n,
    }
    bound = evaluate_formula(tag, inputs)
    label = s_label if tag in ("Eq3", "Eq4") else None
    return BoundCertificate(
        quantity=Quantity(_QUANTITY[tag], n, label),
        bound=bound,
        inequality=tag,
        inputs=inputs,
        ceiling=math.ceil(bound) if tag in LENGTH_TAGS else None,
    )


def bound_from_qm(
    phi: Quasimorphism,
    phig: CertifiedValue,
    n: int,
    kind: str,
    c_upper=None,
    *,
    element=None,
    s_label: Optional[str] = None,
) -> BoundCertificate:
    """Lower bound on a length of ``g^n``; ``kind`` is Eq3, Eq5 or Eq7.

    Eq5 forces ``C = D`` and Eq7 forces ``C = 0``. Raises NoCertificateError
    when the ``phi(g)`` interval contains 0.
    """
    if kind not in ("Eq3", "Eq5", "Eq7"):
        raise DomainError(f"bound_from_qm kind must be Eq3, Eq5 or Eq7, got {kind!r}")
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    return _qm_certificate(phi, phig, n, kind, c_upper, element, s_label)


def stable_bound_from_qm(
    phi: Quasimorphism,
    phig: CertifiedValue,
    kind: str,
    c_upper=None,
    *,
    element=None,
    s_label: Optional[str] = None,
) -> BoundCertificate:
    """Lower bound on a stable length of ``g``; ``kind`` is Eq4, Eq6 or Eq8."""
    if kind not in ("Eq4", "Eq6", "Eq8"):
        raise DomainError(f"stable_bound_from_qm kind must be Eq4, Eq6 or Eq8, got {kind!r}")
    return _qm_certificate(phi, phig, None, kind, c_upper, element, s_label)


def sup_on(phi: Quasimorphism, S: Sequence) -> Fraction:
    """Upper bound for ``C(phi, S) = sup |phi(s)|`` over a finite S."""
    best = Fraction(0)
    for s in S:
        v = phi.certify(s)
        best = max(best, abs(v.lo), abs(v.hi))
    return best


def mcg_dehn_bounds(h: int, k: int, n: int) -> tuple[Fraction, Fraction]:
    """``(1 + nk/(6(3h-1)), k/(3(3h-1)))`` for a product of k disjoint right-handed
    Dehn twists in the mapping class group of a closed genus-h surface."""
    if h < 2:
        raise DomainError(f"genus must be >= 2, got {h}")
    if k < 1:
        raise DomainError(f"need at least one Dehn twist, got k={k}")
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    inputs = {"h": h, "k": k, "n": n}
    return evaluate_formula("Thm31", inputs), evaluate_formula("Cor32", inputs)


def dehn_certificates(h: int, k: int, n: int) -> tuple[BoundCertificate, BoundCertificate]:
    comm, stable = mcg_dehn_bounds(h, k, n)
    return (
        BoundCertificate(Quantity("comm-length", n), comm, "Thm31", {"h": h, "k": k, "n": n},
                         math.ceil(comm)),
        BoundCertificate(Quantity("stable-torsion"), stable, "Cor32", {"h": h, "k": k}),
    )


def recompute(cert: BoundCertificate) -> BoundCertificate:
    bound = evaluate_formula(cert.inequality, cert.inputs)
    ceiling = math.ceil(bound) if cert.inequality in LENGTH_TAGS else None
    return BoundCertificate(cert.quantity, bound, cert.inequality, dict(cert.inputs), ceiling)


def verify_certificate(cert: BoundCertificate) -> bool:
    """True iff recomputing from the inputs reproduces the stored bound exactly."""
    try:
        again = recompute(cert)
    except (DomainError, KeyError, TypeError):
        return False
    return (
        again.bound == cert.bound
        and again.ceiling == cert.ceiling
        and _QUANTITY.get(cert.inequality) == cert.quantity.kind
    )


def wbg_residual(
    phi: Quasimorphism, g, family: Sequence[tuple], n: int
) -> tuple[Fraction, Fraction]:
    """``(|phi(g) - sum (a_i/n) phi(h_i)|, (N-1) D / n)`` for ``g^n = prod h_i^a_i``."""
    if not phi.homogeneous or phi.evaluate is None:
        raise DomainError("wbg_residual needs a homogeneous quasimorphism with exact values")
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    if not family:
        raise DomainError("empty family")
    lhs = product((power(h, a) for h, a in family), g.identity())
    if lhs != power(g, n):
        raise DomainError("family does not multiply to g^n")
    total = sum((Fraction(a, n) * phi(h) for h, a in family), Fraction(0))
    residual = abs(phi(g) - total)
    bound = (len(family) - 1) * Fraction(phi.defect_upper) / n
    if residual > bound:
        raise InvariantViolation(
            f"residual {residual} exceeds (N-1)D/n = {bound}; the declared defect of {phi.id} is wrong"
        )
    return residual, bound
