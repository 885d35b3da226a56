"""Command-line front end.

Exit codes: 0 success (any verdict), 1 usage error, 2 domain or model
validation error, 3 verification mismatch.
"""
from __future__ import annotations

import argparse
import sys
import time

from . import cubic, k3, quartic, verify
from .k3 import BUILTIN_MODELS, K3Model
from .lattice import DivClass2, LatticeError
from .report import RunReport, rows_to_csv, rows_to_table

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_MISMATCH = 0, 1, 2, 3

EPILOG = """\
examples:
  curvelattice classify quartic --model q1 --class 8,6
  curvelattice classify cubic --tuple 15,5,4,4,4,4,2
  curvelattice enumerate --model q1 --bmax 10 --check --format csv
  curvelattice maxgenus 26 5
  curvelattice cohomology --model q1 --class 15,10 --twist 4
  curvelattice verify all

Model files are JSON objects:
  {"name": "...", "gram": [[-2,3],[3,0]], "hyperplane": [1,1],
   "minus_two_curves": [[1,0]], "elliptic_pencils": [[0,1]]}
Set CURVELATTICE_THREADS to run verification suites in parallel.
"""


class DomainError(Exception):
    pass


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_output_flags(p: argparse.ArgumentParser, formats=("json", "table")) -> None:
    p.add_argument("--format", choices=formats, default=formats[0])
    p.add_argument("--stable", action="store_true",
                   help="omit wall-time so identical runs give identical bytes")
    p.add_argument("--out", help="write the report to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="curvelattice", description=__doc__.splitlines()[0],
                     epilog=EPILOG, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    cls = sub.add_parser("classify", help="classify the maximal family of a curve class")
    csub = cls.add_subparsers(dest="surface", required=True, parser_class=_Parser)
    q = csub.add_parser("quartic", help="curve class (a,b) on a rank-2 quartic",
                        epilog="example: curvelattice classify quartic --model q1 --class 8,6")
    q.add_argument("--model", required=True, help="q1, q2 or a path to a model JSON file")
    q.add_argument("--class", dest="cls", required=True, help="divisor class as 'a,b'")
    q.add_argument("--h1-ic1", type=int, default=None,
                   help="known value of h^1(I_C(1)), enabling the linear-normality criterion")
    _add_output_flags(q, ("json", "csv", "table"))
    c = csub.add_parser("cubic", help="7-tuple class on a smooth cubic surface",
                        epilog="example: curvelattice classify cubic --tuple 15,5,4,4,4,4,2")
    c.add_argument("--tuple", required=True, help="'delta,m1,...,m6'")
    _add_output_flags(c)

    e = sub.add_parser("enumerate", help="scan the built-in quartics for family members",
                       epilog="example: curvelattice enumerate --model q2 --bmax 5 --format csv")
    e.add_argument("--model", required=True, choices=["q1", "q2"])
    e.add_argument("--bmax", type=int, required=True)
    e.add_argument("--region", choices=["families", "nonvanishing"], default=None,
                   help="families (q1 default) or nonvanishing (q2 default)")
    e.add_argument("--check", action="store_true",
                   help="compare with the closed-form families; exit 3 on mismatch")
    _add_output_flags(e, ("csv", "json", "table"))

    m = sub.add_parser("maxgenus", help="maximum genus G(d,s)",
                       epilog="example: curvelattice maxgenus 26 5")
    m.add_argument("d", type=int)
    m.add_argument("s", type=int)
    _add_output_flags(m)

    h = sub.add_parser("cohomology", help="h^i(O_S(C - nH)) and h^1(I_C(n))",
                       epilog="example: curvelattice cohomology --model q1 --class 15,10 --twist 4")
    h.add_argument("--model", required=True)
    h.add_argument("--class", dest="cls", required=True)
    h.add_argument("--twist", type=int, default=0)
    _add_output_flags(h)

    v = sub.add_parser("verify", help="run invariant scans",
                       epilog="example: curvelattice verify oracles")
    v.add_argument("suite", nargs="?", default="all",
                   choices=["rr", "oracles", "families", "crossover", "all"])
    _add_output_flags(v)
    return parser


def _load_model(spec: str) -> K3Model:
    if spec.lower() in BUILTIN_MODELS:
        return BUILTIN_MODELS[spec.lower()]
    try:
        return K3Model.load(spec)
    except OSError as exc:
        raise DomainError(f"cannot read model file {spec!r}: {exc}") from exc


def _parse_class(text: str) -> DivClass2:
    try:
        return DivClass2.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _quartic_row(v: quartic.Verdict) -> dict:
    doc = v.to_dict()
    doc["a"], doc["b"] = doc["class"]
    return doc


def cmd_classify_quartic(args) -> tuple[RunReport, int]:
    M = _load_model(args.model)
    C = _parse_class(args.cls)
    verdict = quartic.classify_quartic(M, C, h1_IC1=args.h1_ic1)
    rep = RunReport(command=["classify", "quartic"], model=M.name,
                    inputs={"class": list(C), "h1_IC1": args.h1_ic1},
                    payload=[_quartic_row(verdict)])
    return rep, EXIT_OK


def cmd_classify_cubic(args) -> tuple[RunReport, int]:
    try:
        C = cubic.Septuple.parse(args.tuple)
    except cubic.NumpicViolation:
        raise
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    verdict = cubic.classify_mainC(C)
    doc = verdict.to_dict()
    doc["criterion_A"] = cubic.criterion_A(C).value
    doc["criterion_B"] = cubic.criterion_B(C).to_dict()
    rep = RunReport(command=["classify", "cubic"], inputs={"tuple": C.as_list()}, payload=[doc])
    return rep, EXIT_OK


def cmd_enumerate(args) -> tuple[RunReport, int]:
    if args.bmax < 0:
        raise DomainError(f"--bmax must be >= 0, got {args.bmax}")
    M = BUILTIN_MODELS[args.model]
    region = args.region or ("families" if args.model == "q1" else "nonvanishing")
    if (args.model, region) == ("q1", "families"):
        found = quartic.enumerate_families_q1(args.bmax)
        closed = quartic.family_members(quartic.Q1_FAMILIES, args.bmax)
    elif (args.model, region) == ("q2", "nonvanishing"):
        found = quartic.enumerate_q2_nonvanishing(args.bmax)
        closed = quartic.family_members(quartic.Q2_FAMILIES, args.bmax)
    else:
        raise UsageError(f"region {region!r} is not defined for model {args.model}")
    rows = [_quartic_row(quartic.classify_quartic(M, C)) for C in found]
    rep = RunReport(command=["enumerate"], model=M.name,
                    inputs={"bmax": args.bmax, "region": region, "check": args.check},
                    payload=rows)
    code = EXIT_OK
    if args.check:
        extra = sorted(set(found) - set(closed))
        missing = sorted(set(closed) - set(found))
        rep.checks["closed_form"] = {
            "ok": not extra and not missing,
            "extra": [list(c) for c in extra],
            "missing": [list(c) for c in missing],
        }
        if extra or missing:
            code = EXIT_MISMATCH
    return rep, code


def cmd_maxgenus(args) -> tuple[RunReport, int]:
    try:
        G = quartic.max_genus(args.d, args.s)
    except quartic.OutOfRange as exc:
        raise DomainError(str(exc)) from exc
    rep = RunReport(command=["maxgenus"], inputs={"d": args.d, "s": args.s},
                    payload=[{"d": args.d, "s": args.s, "G": G, "r": quartic.max_genus_r(args.d, args.s)}])
    return rep, EXIT_OK


def cmd_cohomology(args) -> tuple[RunReport, int]:
    M = _load_model(args.model)
    C = _parse_class(args.cls)
    D = C - M.hyperplane * args.twist
    h = k3.cohomology(M, D)
    row = h.to_dict()
    row["curve_class"] = list(C)
    row["twist"] = args.twist
    row["h1_I_C_twist"] = h.h1
    rep = RunReport(command=["cohomology"], model=M.name,
                    inputs={"class": list(C), "twist": args.twist}, payload=[row])
    return rep, EXIT_OK


def cmd_verify(args) -> tuple[RunReport, int]:
    names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    results = verify.run_suites(names)
    rep = RunReport(command=["verify", args.suite], inputs={"suite": args.suite},
                    checks={r.name: r.to_dict() for r in results})
    rep.payload = [{"suite": r.name, "checked": r.checked, "failed": r.failed, "ok": r.passed}
                   for r in results]
    return rep, EXIT_OK if all(r.passed for r in results) else EXIT_MISMATCH


def _render(rep: RunReport, args) -> str:
    if args.format == "csv":
        return rows_to_csv(rep.payload)
    if args.format == "table":
        return rows_to_table(rep.payload)
    return rep.serialize(stable=args.stable)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {
        "classify": lambda a: cmd_classify_quartic(a) if a.surface == "quartic" else cmd_classify_cubic(a),
        "enumerate": cmd_enumerate,
        "maxgenus": cmd_maxgenus,
        "cohomology": cmd_cohomology,
        "verify": cmd_verify,
    }[args.command]
    start = time.perf_counter()
    try:
        rep, code = handler(args)
    except UsageError as exc:
        print(f"curvelattice: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, LatticeError, cubic.NumpicViolation) as exc:
        print(f"curvelattice: error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    rep.wall_time = time.perf_counter() - start
    text = _render(rep, args)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
