"""Command-line interface.

Subcommands: run, example, gb, bott, vinberg, schur-dim, verlinde.
Exit codes: 0 all verdicts pass, 2 a NONGENERIC report, 1 malformed input or
usage errors (the message names the offending field).
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import InputError, UsageError
from . import bott as bott_mod
from .groebner import Ideal, eliminate, hilbert, saturate
from .pipeline import CASES, GALLERY, example_gallery, report_emit, run_case
from .poly import PolynomialRing
from . import vinberg as vinberg_mod


def _parse_int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x != ""]
    except ValueError as exc:
        raise InputError(f"expected a comma-separated integer list, got {text!r}") from exc


def _cmd_run(args) -> int:
    report = run_case(args.case, prime=args.prime, seed=args.seed, chart=args.chart)
    payload = report_emit(report, args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
    return report.exit_code


def _cmd_example(args) -> int:
    report = example_gallery(args.name, prime=args.prime)
    sys.stdout.write(report_emit(report, args.format))
    return report.exit_code


def _load_gb_input(path: str):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read input file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"input is not valid JSON: {exc}") from exc
    for name in ("prime", "variables", "generators"):
        if name not in data:
            raise InputError(f"gb input missing field {name!r}")
    if not isinstance(data["variables"], list) or not data["variables"]:
        raise InputError("gb input field 'variables' must be a nonempty list")
    if not isinstance(data["generators"], list):
        raise InputError("gb input field 'generators' must be a list")
    try:
        ring = PolynomialRing(prime=data["prime"], variables=data["variables"])
    except UsageError as exc:
        raise InputError(f"gb input field 'prime'/'variables' invalid: {exc}") from exc
    gens = []
    for i, text in enumerate(data["generators"]):
        try:
            gens.append(ring.parse(text))
        except UsageError as exc:
            raise InputError(f"gb input generators[{i}] invalid: {exc}") from exc
    return ring, Ideal(ring, gens)


def _cmd_gb(args) -> int:
    ring, ideal = _load_gb_input(args.input)
    if args.saturate:
        try:
            f = ring.parse(args.saturate)
        except UsageError as exc:
            raise InputError(f"--saturate polynomial invalid: {exc}") from exc
        ideal = saturate(ideal, f)
    if args.eliminate:
        names = [v for v in args.eliminate.replace(" ", "").split(",") if v]
        ideal = eliminate(ideal, names)
    gb = ideal.groebner_basis()
    out = {"basis": [str(g) for g in gb.elements]}
    if args.hilbert:
        hd = hilbert(ideal)
        out["numerator"] = str(hd.numerator)
        out["dim"] = hd.krull_dimension
        out["degree"] = hd.degree
    sys.stdout.write(json.dumps(out, sort_keys=True, indent=2) + "\n")
    return 0


def _cmd_bott(args) -> int:
    if args.resolution_file:
        try:
            with open(args.resolution_file) as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise InputError(f"cannot read resolution file: {exc}") from exc
        if "space" not in data or "terms" not in data:
            raise InputError("resolution file missing field 'space' or 'terms'")
        space_data = data["space"]
        family = space_data.get("type")
        if family == "A":
            if "N" not in space_data:
                raise InputError("space of type A missing field 'N'")
            space = bott_mod.Space("A", space_data["N"])
        elif family == "C":
            if "n" not in space_data:
                raise InputError("space of type C missing field 'n'")
            space = bott_mod.Space("C", space_data["n"])
        else:
            raise InputError(f"space field 'type' must be 'A' or 'C', got {family!r}")
        terms = []
        for i, t in enumerate(data["terms"]):
            for name in ("weight", "twist", "h"):
                if name not in t:
                    raise InputError(f"terms[{i}] missing field {name!r}")
            terms.append(bott_mod.ResolutionTerm(
                tuple(t["weight"]), t["twist"], t["h"], t.get("mult", 1)))
        table = bott_mod.cohomology_of_resolution(terms, space)
        out = {
            "degeneration_verified": table.degeneration_verified,
            "contributions": [{"h": h, "degree": j, "dimension": d}
                              for h, j, d in table.contributions],
        }
        if table.entries is not None:
            out["h"] = list(table.entries)
        sys.stdout.write(json.dumps(out, sort_keys=True, indent=2) + "\n")
        return 0

    if args.weight is None:
        raise InputError("bott needs --weight (or resolution --file)")
    weight = _parse_int_list(args.weight)
    if args.rho_added:
        n = len(weight)
        rho = list(range(n - 1, -1, -1)) if args.type == "A" else list(range(n, 0, -1))
        weight = [w - r for w, r in zip(weight, rho)]
    outcome = (bott_mod.bott_type_a(weight) if args.type == "A"
               else bott_mod.bott_type_c(weight))
    if outcome.vanishes:
        out = {"vanishes": True}
    else:
        out = {"vanishes": False, "degree": outcome.degree,
               "dominant_weight": list(outcome.dominant_weight),
               "dimension": outcome.dimension}
    sys.stdout.write(json.dumps(out, sort_keys=True, indent=2) + "\n")
    return 0


def _cmd_vinberg(args) -> int:
    if args.action == "table":
        rows = vinberg_mod.orbit_table()
        lines = [f"{'label':>5}  {'type':<8}{'dim':>4}  representative"]
        for rec in rows:
            rep = " + ".join("[" + ",".join(map(str, t)) + "]"
                             for t in rec.representative_triples) or "0"
            lines.append(f"{rec.label:>5}  {rec.support_type:<8}"
                         f"{rec.expected_dimension:>4}  {rep}")
        sys.stdout.write("\n".join(lines) + "\n")
        return 0
    if args.action == "dim":
        if not args.terms:
            raise InputError("vinberg dim needs --terms")
        v = vinberg_mod.parse_bracket_terms(args.terms)
        sys.stdout.write(f"{vinberg_mod.orbit_dimension(v)}\n")
        return 0
    if args.action == "supports":
        if not args.type:
            raise InputError("vinberg supports needs --type")
        count, reps = vinberg_mod.enumerate_supports(args.type)
        out = {"count": count,
               "representatives": [[list(t) for t in r.triples()] for r in reps]}
        sys.stdout.write(json.dumps(out, sort_keys=True, indent=2) + "\n")
        return 0
    raise InputError(f"unknown vinberg action {args.action!r}")


def _cmd_schur_dim(args) -> int:
    lam = _parse_int_list(args.lam)
    sys.stdout.write(f"{bott_mod.schur_dim(lam, args.n)}\n")
    return 0


def _cmd_verlinde(args) -> int:
    sys.stdout.write(f"{bott_mod.verlinde(args.g, args.k)}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="theta-loci",
        description="Pfaffian degeneracy loci over small prime fields")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="run a degeneracy-locus case")
    p.add_argument("--case", required=True, choices=CASES)
    p.add_argument("--prime", type=int, default=101)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--chart", type=int, default=None,
                   help="saturation coordinate (default: the last one)")
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=_cmd_run)

    p = sub.add_parser("example", help="run a singular-quintic gallery example")
    p.add_argument("--name", required=True, choices=GALLERY)
    p.add_argument("--prime", type=int, default=101)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=_cmd_example)

    p = sub.add_parser("gb", help="Groebner basis of a JSON-described ideal")
    p.add_argument("input", help="JSON file {prime, variables, generators}")
    p.add_argument("--saturate", default=None, metavar="POLY")
    p.add_argument("--eliminate", default=None, metavar="VARS")
    p.add_argument("--hilbert", action="store_true")
    p.set_defaults(func=_cmd_gb)

    p = sub.add_parser("bott", help="dotted-action cohomology calculator")
    p.add_argument("positional", nargs="?", choices=("resolution",),
                   help="'resolution' to process a term file")
    p.add_argument("--type", choices=("A", "C"), default="A")
    p.add_argument("--weight", default=None)
    p.add_argument("--rho-added", action="store_true",
                   help="the input weight already includes rho")
    p.add_argument("--file", dest="resolution_file", default=None)
    p.set_defaults(func=_cmd_bott)

    p = sub.add_parser("vinberg", help="orbit classification tools")
    p.add_argument("action", choices=("table", "dim", "supports"))
    p.add_argument("--terms", default=None, help='e.g. "[1,2,3]+[4,5,6]"')
    p.add_argument("--type", default=None, help="support type, e.g. 3A1")
    p.set_defaults(func=_cmd_vinberg)

    p = sub.add_parser("schur-dim", help="hook content dimension")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_schur_dim)

    p = sub.add_parser("verlinde", help="rank-2 Verlinde number")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=_cmd_verlinde)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
