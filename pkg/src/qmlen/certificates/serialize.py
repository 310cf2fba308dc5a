"""Versioned JSON documents for witnesses and bound certificates.

Rationals are written as ``"p/q"`` strings and elements in the text syntax
of their group, so the documents are byte-stable: ``dumps`` sorts keys and
never embeds timestamps.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction

from ..errors import DomainError
from ..groups import format_element, parse_group
from ..quasimorphism import format_rational
from .bounds import BoundCertificate, Quantity
from .witness import CommutatorOf, Factor, FactorizationWitness, TorsionOfOrder

VERSION = 1
_RATIONAL_INPUTS = ("phi_lo", "phi_hi", "defect", "c_upper")
_RATIONAL_RE = re.compile(r"-?\d+(/[1-9]\d*)?")


class SchemaError(DomainError):
    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


def _claim_to_dict(claim) -> dict:
    if isinstance(claim, TorsionOfOrder):
        return {"kind": "torsion", "order": claim.order}
    return {"kind": "commutator", "x": format_element(claim.x), "y": format_element(claim.y)}


def witness_to_dict(w: FactorizationWitness) -> dict:
    return {
        "version": VERSION,
        "type": "witness",
        "group": w.target.group,
        "target": format_element(w.target),
        "factors": [
            {"element": format_element(f.element), "claim": _claim_to_dict(f.claim)}
            for f in w.factors
        ],
    }


def certificate_to_dict(c: BoundCertificate) -> dict:
    inputs = {}
    for key, value in sorted(c.inputs.items()):
        inputs[key] = format_rational(value) if key in _RATIONAL_INPUTS else value
    return {
        "version": VERSION,
        "type": "bound",
        "quantity": {"kind": c.quantity.kind, "n": c.quantity.n, "s_label": c.quantity.s_label},
        "inequality": c.inequality,
        "inputs": inputs,
        "bound": format_rational(c.bound),
        "ceiling": c.ceiling,
    }


def to_dict(obj) -> dict:
    if isinstance(obj, FactorizationWitness):
        return witness_to_dict(obj)
    if isinstance(obj, BoundCertificate):
        return certificate_to_dict(obj)
    raise DomainError(f"cannot serialize {type(obj).__name__}")


def dumps(obj) -> str:
    return json.dumps(to_dict(obj), sort_keys=True, indent=2) + "\n"


def _get(doc, key, path, types):
    if not isinstance(doc, dict):
        raise SchemaError(path, "expected an object")
    if key not in doc:
        raise SchemaError(f"{path}.{key}", "missing")
    value = doc[key]
    if not isinstance(value, types) or (isinstance(value, bool) and bool not in _as_tuple(types)):
        raise SchemaError(f"{path}.{key}", f"expected {_type_names(types)}, got {type(value).__name__}")
    return value


def _as_tuple(types):
    return types if isinstance(types, tuple) else (types,)


def _type_names(types) -> str:
    return " or ".join("null" if t is type(None) else t.__name__ for t in _as_tuple(types))


def _element(group, text, path):
    try:
        return group.parse(text)
    except DomainError as exc:
        raise SchemaError(path, str(exc)) from None


def witness_from_dict(doc: dict) -> FactorizationWitness:
    _check_header(doc, "witness")
    try:
        group = parse_group(_get(doc, "group", "$", str))
    except SchemaError:
        raise
    except DomainError as exc:
        raise SchemaError("$.group", str(exc)) from None
    target = _element(group, _get(doc, "target", "$", str), "$.target")
    factors = []
    for i, entry in enumerate(_get(doc, "factors", "$", list)):
        path = f"$.factors[{i}]"
        element = _element(group, _get(entry, "element", path, str), f"{path}.element")
        claim_doc = _get(entry, "claim", path, dict)
        kind = _get(claim_doc, "kind", f"{path}.claim", str)
        if kind == "torsion":
            m = _get(claim_doc, "order", f"{path}.claim", int)
            claim = TorsionOfOrder(m)
        elif kind == "commutator":
            x = _element(group, _get(claim_doc, "x", f"{path}.claim", str), f"{path}.claim.x")
            y = _element(group, _get(claim_doc, "y", f"{path}.claim", str), f"{path}.claim.y")
            claim = CommutatorOf(x, y)
        else:
            raise SchemaError(f"{path}.claim.kind", f"unknown claim kind {kind!r}")
        factors.append(Factor(element, claim))
    return FactorizationWitness(target, tuple(factors))


def certificate_from_dict(doc: dict) -> BoundCertificate:
    _check_header(doc, "bound")
    q = _get(doc, "quantity", "$", dict)
    quantity = Quantity(
        _get(q, "kind", "$.quantity", str),
        _get(q, "n", "$.quantity", (int, type(None))),
        _get(q, "s_label", "$.quantity", (str, type(None))),
    )
    inputs = {}
    for key, value in _get(doc, "inputs", "$", dict).items():
        if key in _RATIONAL_INPUTS:
            inputs[key] = _rational(value, f"$.inputs.{key}")
        else:
            inputs[key] = value
    return BoundCertificate(
        quantity=quantity,
        bound=_rational(_get(doc, "bound", "$", str), "$.bound"),
        inequality=_get(doc, "inequality", "$", str),
        inputs=inputs,
        ceiling=_get(doc, "ceiling", "$", (int, type(None))),
    )


def _rational(text, path) -> Fraction:
    if not isinstance(text, str):
        raise SchemaError(path, "expected a 'p/q' string")
    if not _RATIONAL_RE.fullmatch(text):
        raise SchemaError(path, f"not an exact rational: {text!r}")
    return Fraction(text)


def _check_header(doc, expected_type: str) -> None:
    if not isinstance(doc, dict):
        raise SchemaError("$", "expected an object")
    version = _get(doc, "version", "$", int)
    if version != VERSION:
        raise SchemaError("$.version", f"unsupported version {version}")
    kind = _get(doc, "type", "$", str)
    if kind != expected_type:
        raise SchemaError("$.type", f"expected {expected_type!r}, got {kind!r}")


def from_dict(doc: dict):
    kind = _get(doc, "type", "$", str)
    if kind == "witness":
        return witness_from_dict(doc)
    if kind == "bound":
        return certificate_from_dict(doc)
    raise SchemaError("$.type", f"unknown document type {kind!r}")


def loads(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError("$", f"invalid JSON: {exc}") from None
    return from_dict(doc)
