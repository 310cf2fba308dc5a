"""``qmlen`` command-line front end.

Exit codes: 0 success, 1 usage/parse error, 2 inconclusive search,
3 the quasimorphism gives no bound, 4 verification failure.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .certificates import (
    dehn_certificates,
    dumps,
    bound_from_qm,
    involution_power_witness,
    lift_projective_witness,
    loads,
    projective_torsion_witness,
    sl2z_example_witness,
    stable_bound_from_qm,
    sup_on,
    twist_commutator_witness,
    verify_certificate,
    witness_failure,
)
from .certificates.bounds import BoundCertificate
from .certificates.serialize import SchemaError
from .certificates.witness import FactorizationWitness
from .errors import DomainError, InvariantViolation, NoCertificateError, QmlenError, ResourceError
from .groups import IntMatrix2, ProjMatrix2, SymmetricGroup, parse_group, power, project
from .lengths import GeneratingSet, length_exact
from .quasimorphism import defect_search, format_rational, get_quasimorphism

EXIT_OK, EXIT_USAGE, EXIT_INCONCLUSIVE, EXIT_NO_BOUND, EXIT_VERIFY = 0, 1, 2, 3, 4

KIND_TAGS = {"length": "Eq3", "comm": "Eq5", "torsion": "Eq7",
             "stable-comm": "Eq6", "stable-torsion": "Eq8"}


def _approx(x: Fraction) -> str:
    return f"{format_rational(x)} (~{float(x):.4f}, approx)"


def _emit(doc, args) -> None:
    text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if getattr(args, "json", None):
        with open(args.json, "w") as fh:
            fh.write(text)


def _parse_gens(group, text: Optional[str], symmetric: bool) -> GeneratingSet:
    if text is None or text == "standard":
        gens = group.generators()
        symmetric = True
        label = "standard"
    elif text == "transpositions":
        if not isinstance(group, SymmetricGroup):
            raise DomainError("'transpositions' needs a perm:<degree> group")
        gens = group.transpositions()
        label = "transpositions"
    else:
        gens = [group.parse(part) for part in text.split(";") if part.strip()]
        label = text
    if symmetric:
        return GeneratingSet.symmetric_closure(gens, label)
    return GeneratingSet(tuple(gens), label)


def cmd_length(args) -> int:
    group = parse_group(args.group)
    g = group.parse(args.element)
    S = _parse_gens(group, args.gens, args.symmetric)
    result = length_exact(g, S, args.radius, method=args.method)
    print(f"l_S({group.format(g)}) = {result}  [S = {S.label}, radius searched {result.radius_searched}"
          + (", search saturated: length is infinite]" if result.saturated else "]"))
    doc = {
        "type": "length",
        "group": group.tag,
        "element": group.format(g),
        "S": [group.format(s) for s in S],
        "result": {"kind": result.kind, "value": result.value,
                   "radius_searched": result.radius_searched, "saturated": result.saturated},
    }
    _emit(doc, args)
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            out = csv.writer(fh)
            out.writerow(["group", "element", "kind", "value", "radius_searched", "saturated"])
            out.writerow([group.tag, group.format(g), result.kind, result.value,
                          result.radius_searched, result.saturated])
    return EXIT_OK if result.is_exact else EXIT_INCONCLUSIVE


@dataclass
class ReportRow:
    n: Optional[int]
    lower_bounds: list = field(default_factory=list)  # (tag, Fraction)
    upper_witness: Optional[tuple] = None  # (factor count, witness id)
    note: str = ""

    @property
    def consistent(self) -> bool:
        if self.upper_witness is None:
            return True
        return all(b <= self.upper_witness[0] for _, b in self.lower_bounds)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "lower_bounds": [{"inequality": t, "bound": format_rational(b)} for t, b in self.lower_bounds],
            "upper_witness": None if self.upper_witness is None
            else {"factors": self.upper_witness[0], "witness": self.upper_witness[1]},
            "consistent": self.consistent,
            "note": self.note,
        }


def _torsion_upper(g) -> Optional[tuple]:
    if isinstance(g, ProjMatrix2):
        if g.is_identity():
            return (0, "identity")
        return (len(projective_torsion_witness(g)), "psl-syllables")
    if isinstance(g, IntMatrix2):
        if g.is_identity():
            return (0, "identity")
        if project(g).is_identity():
            return (1, "minus-identity")
        w = lift_projective_witness(projective_torsion_witness(project(g)), g)
        return (len(w), "lifted-psl-syllables")
    return None


def _dehn_rows(args) -> list[ReportRow]:
    rows = []
    for n in range(1, args.n_max + 1):
        thm, cor = dehn_certificates(args.genus, args.twists, n)
        rows.append(ReportRow(n, [("Thm31", thm.bound), ("Cor32", cor.bound)]))
    return rows


def _print_rows(rows: list[ReportRow]) -> None:
    for row in rows:
        parts = [f"n={row.n}" if row.n is not None else "stable"]
        if row.lower_bounds:
            parts += [f"{t} >= {_approx(b)}" for t, b in row.lower_bounds]
        elif not row.note:
            parts.append("no bound")
        if row.upper_witness is not None:
            parts.append(f"upper {row.upper_witness[0]} [{row.upper_witness[1]}]")
        if row.note:
            parts.append(row.note)
        parts.append("ok" if row.consistent else "INCONSISTENT")
        print("  ".join(parts))


def cmd_table(args) -> int:
    if args.genus is not None or args.twists is not None:
        if args.genus is None or args.twists is None:
            raise DomainError("Dehn-twist mode needs both --genus and --twists")
        rows = _dehn_rows(args)
        _print_rows(rows)
        _emit({"type": "table", "mode": "dehn", "genus": args.genus, "twists": args.twists,
               "rows": [r.to_dict() for r in rows]}, args)
        _write_rows_csv(rows, args)
        return EXIT_OK if all(r.consistent for r in rows) else EXIT_VERIFY

    if args.group is None or args.element is None or args.qm is None:
        raise DomainError("table needs --group, --element and --qm (or --genus/--twists)")
    group = parse_group(args.group)
    g = group.parse(args.element)
    phi = get_quasimorphism(args.qm, group).homogenization()
    tag = KIND_TAGS[args.kind]
    phig = phi.certify(g, args.width)
    S = None
    c_upper = None
    if args.kind == "length":
        S = _parse_gens(group, args.gens, args.symmetric)
        c_upper = sup_on(phi, S)
    rows: list[ReportRow] = []
    no_bound = not phig.excludes_zero()
    if args.kind.startswith("stable"):
        row = ReportRow(None)
        if no_bound:
            row.note = "no bound: phi(g) interval contains 0"
        else:
            cert = stable_bound_from_qm(phi, phig, tag, c_upper, element=g)
            row.lower_bounds.append((tag, cert.bound))
        rows.append(row)
    else:
        for n in range(1, args.n_max + 1):
            row = ReportRow(n)
            try:
                cert = bound_from_qm(phi, phig, n, tag, c_upper, element=g,
                                     s_label=None if S is None else S.label)
                row.lower_bounds.append((tag, cert.bound))
            except NoCertificateError:
                row.note = "no bound: phi(g) interval contains 0"
            gn = power(g, n)
            if args.kind == "torsion":
                row.upper_witness = _torsion_upper(gn)
            elif args.kind == "length" and args.radius:
                res = length_exact(gn, S, args.radius)
                if res.is_exact:
                    row.upper_witness = (res.value, "bfs")
            rows.append(row)
    _print_rows(rows)
    print(f"phi = {phi.id}, phi(g) in [{format_rational(phig.lo)}, {format_rational(phig.hi)}] "
          f"({phig.provenance}), D <= {format_rational(phi.defect_upper)}")
    _emit({"type": "table", "group": group.tag, "element": group.format(g), "qm": phi.id,
           "kind": args.kind, "phi": {"lo": format_rational(phig.lo), "hi": format_rational(phig.hi),
                                      "n_used": phig.n_used},
           "defect": format_rational(phi.defect_upper),
           "rows": [r.to_dict() for r in rows]}, args)
    _write_rows_csv(rows, args)
    if not all(r.consistent for r in rows):
        return EXIT_VERIFY
    return EXIT_NO_BOUND if no_bound else EXIT_OK


def _write_rows_csv(rows, args) -> None:
    if not args.csv:
        return
    with open(args.csv, "w", newline="") as fh:
        out = csv.writer(fh)
        out.writerow(["n", "lower_bounds", "upper_factors", "upper_witness", "consistent", "note"])
        for r in rows:
            d = r.to_dict()
            out.writerow([
                "" if r.n is None else r.n,
                ";".join(f"{b['inequality']}={b['bound']}" for b in d["lower_bounds"]),
                "" if r.upper_witness is None else r.upper_witness[0],
                "" if r.upper_witness is None else r.upper_witness[1],
                d["consistent"],
                r.note,
            ])


def cmd_verify(args) -> int:
    with open(args.file) as fh:
        text = fh.read()
    try:
        obj = loads(text)
    except SchemaError as exc:
        print(f"schema error at {exc}", file=sys.stderr)
        return EXIT_USAGE
    if isinstance(obj, FactorizationWitness):
        problem = witness_failure(obj)
        if problem:
            print(f"FAIL: {problem}")
            return EXIT_VERIFY
        print(f"OK: {len(obj)} factor(s) multiply to {obj.target} and every claim holds")
        return EXIT_OK
    assert isinstance(obj, BoundCertificate)
    if verify_certificate(obj):
        print(f"OK: {obj.quantity} >= {format_rational(obj.bound)} recomputed by {obj.inequality}")
        return EXIT_OK
    print("FAIL: bound does not match recomputation from inputs")
    return EXIT_VERIFY


def cmd_qm_eval(args) -> int:
    group = parse_group(args.group)
    g = group.parse(args.element)
    phi = get_quasimorphism(args.qm, group)
    doc = {"type": "qm-eval", "group": group.tag, "element": group.format(g), "qm": phi.id,
           "homogeneous": phi.homogeneous, "defect": format_rational(phi.defect_upper)}
    value = phi(g)
    doc["value"] = format_rational(value)
    print(f"{phi.id}({group.format(g)}) = {format_rational(value)}")
    if not phi.homogeneous:
        hom = phi.homogenization().certify(g, args.width)
        doc["homogenized"] = {"lo": format_rational(hom.lo), "hi": format_rational(hom.hi),
                              "n_used": hom.n_used}
        print(f"homogenization in [{format_rational(hom.lo)}, {format_rational(hom.hi)}] ({hom.provenance})")
    _emit(doc, args)
    return EXIT_OK


def cmd_defect_search(args) -> int:
    group = parse_group(args.group)
    phi = get_quasimorphism(args.qm, group)
    gens = list(_parse_gens(group, args.gens, False))
    try:
        value = defect_search(phi, gens, args.radius)
    except ResourceError as exc:
        print(f"partial: defect >= {format_rational(exc.partial)} ({exc})")
        _emit({"type": "defect-search", "qm": phi.id, "lower_bound": format_rational(exc.partial),
               "complete": False}, args)
        return EXIT_INCONCLUSIVE
    print(f"{phi.id}: observed defect {format_rational(value)} <= declared {format_rational(phi.defect_upper)}")
    _emit({"type": "defect-search", "qm": phi.id, "group": group.tag, "radius": args.radius,
           "lower_bound": format_rational(value), "declared": format_rational(phi.defect_upper),
           "complete": True}, args)
    return EXIT_OK


def cmd_witness(args) -> int:
    if args.type == "sl2z-example":
        w = sl2z_example_witness(args.n)
    else:
        group = parse_group(args.group or "psl2z")
        if args.type == "involution":
            w = involution_power_witness(group.parse(args.s), group.parse(args.t), args.n)
        elif args.type == "twist":
            w = twist_commutator_witness(group.parse(args.f), group.parse(args.t), args.n)
        else:
            g = group.parse(args.element)
            if isinstance(g, IntMatrix2):
                w = lift_projective_witness(projective_torsion_witness(project(g)), g)
            else:
                w = projective_torsion_witness(g)
    text = dumps(w)
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qmlen", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, element=True):
        sp.add_argument("--group", help="free:<rank> | sl2z | psl2z | perm:<degree>")
        if element:
            sp.add_argument("--element", help="element in the group's text syntax")
        sp.add_argument("--json", help="write the JSON document here")
        sp.add_argument("--csv", help="write a CSV export here")

    sp = sub.add_parser("length", help="exact S-length by breadth-first search")
    common(sp)
    sp.add_argument("--gens", help="'standard', 'transpositions' or ';'-separated elements")
    sp.add_argument("--symmetric", action="store_true", help="add inverses of --gens")
    sp.add_argument("--radius", type=int, default=6)
    sp.add_argument("--method", choices=["bfs", "mitm"], default="bfs")
    sp.set_defaults(func=cmd_length)

    sp = sub.add_parser("table", help="lower bounds and upper witnesses for n = 1..n_max")
    common(sp)
    sp.add_argument("--qm")
    sp.add_argument("--kind", choices=sorted(KIND_TAGS), default="torsion")
    sp.add_argument("--n-max", type=int, default=12)
    sp.add_argument("--gens")
    sp.add_argument("--symmetric", action="store_true")
    sp.add_argument("--radius", type=int, default=0, help="BFS radius for length-kind uppers")
    sp.add_argument("--width", type=Fraction, default=Fraction(1, 64))
    sp.add_argument("--genus", type=int, help="Dehn-twist mode: surface genus h")
    sp.add_argument("--twists", type=int, help="Dehn-twist mode: number k of disjoint twists")
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("verify", help="verify a witness or certificate JSON file")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("qm-eval", help="evaluate a quasimorphism exactly")
    common(sp)
    sp.add_argument("--qm", required=True)
    sp.add_argument("--width", type=Fraction, default=Fraction(1, 64))
    sp.set_defaults(func=cmd_qm_eval)

    sp = sub.add_parser("defect-search", help="certified lower bound on a defect")
    common(sp, element=False)
    sp.add_argument("--qm", required=True)
    sp.add_argument("--radius", type=int, default=3)
    sp.add_argument("--gens")
    sp.set_defaults(func=cmd_defect_search)

    sp = sub.add_parser("witness", help="generate a factorization witness")
    common(sp)
    sp.add_argument("--type", required=True, choices=["sl2z-example", "involution", "twist", "syllable"])
    sp.add_argument("--n", type=int, default=1)
    sp.add_argument("--s")
    sp.add_argument("--t")
    sp.add_argument("--f")
    sp.set_defaults(func=cmd_witness)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InvariantViolation as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (QmlenError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
