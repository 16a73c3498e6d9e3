"""Command-line front end.

Commands:
    reebtube list [FILTER] [--format ...]
    reebtube inspect SPEC [--format ...]
    reebtube verify SPEC [--suite GLOB] [--tolerance X] [--max-rank N] [--format ...]
    reebtube tube SPEC --case ID --radius T [--tolerance X] [--format ...]
    reebtube report --all [--suite GLOB] [--tolerance X] [--max-rank N] [--format ...]

Exit codes: 0 all checks pass (flagged and skipped do not count), 1 any
check fails, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import report as rp
from . import suites
from .spaces import SpaceSpec, catalog_entries, parse_space_spec, space_name, tube_case_for
from .anchors import anchor_for

DESK_SET = (
    [f"A:r={r}:k={k}" for r in range(1, 7) for k in range(1, r + 1) if 2 * k <= r + 1]
    + [f"B:r={r}" for r in range(2, 6)]
    + [f"C:r={r}" for r in range(3, 6)]
    + [f"D:r={r}:k={k}" for r in range(4, 7) for k in (1, r)]
    + ["E:r=6", "E:r=7"]
)


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="reebtube", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("list", help="enumerate supported spaces")
    p.add_argument("filter", nargs="?", default="")
    common(p)
    p.set_defaults(func=cmd_list)

    p = sub.add_parser("inspect", help="summarize one space model")
    p.add_argument("spec")
    common(p)
    p.set_defaults(func=cmd_inspect)

    p = sub.add_parser("verify", help="run the verification suites on one space")
    p.add_argument("spec")
    p.add_argument("--suite", default="*", help="glob over check ids, e.g. 'chevalley.*'")
    p.add_argument("--tolerance", type=float, default=None,
                   help="base float tolerance (default 1e-12; derived ones scale)")
    p.add_argument("--max-rank", type=int, default=None,
                   help="rank cap for exhaustive bracket-identity loops (default 4)")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("tube", help="tube table around a totally geodesic focal set")
    p.add_argument("spec")
    p.add_argument("--case", required=True,
                   help="tube case: i..iv or CPk_in_CPr, Gk_in_Gk, CPr1_in_G2R2r, SO_in_SO")
    p.add_argument("--radius", type=float, required=True)
    p.add_argument("--tolerance", type=float, default=None)
    common(p)
    p.set_defaults(func=cmd_tube)

    p = sub.add_parser("report", help="verify every desk-scale space")
    p.add_argument("--all", action="store_true", required=True)
    p.add_argument("--suite", default="*")
    p.add_argument("--tolerance", type=float, default=None)
    p.add_argument("--max-rank", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_report)
    return parser


def _tolerances(args) -> suites.Tolerances:
    if getattr(args, "tolerance", None) is None:
        return suites.Tolerances()
    return suites.Tolerances.from_base(args.tolerance)


def cmd_list(args) -> int:
    rows = catalog_entries(args.filter)
    if args.format == "json":
        print(json.dumps({"spaces": rows}, indent=2))
        return 0
    header = ["family", "nodes", "space", "dim_C", "rank", "tube case"]
    table = [[r["family"], r["nodes"], r["name"], r["complex_dim"], r["space_rank"],
              r["tube"]] for r in rows]
    print(rp._table(header, table))
    return 0


def cmd_inspect(args) -> int:
    spec = parse_space_spec(args.spec)
    report = suites.model_summary(spec)
    _emit(report, args.format)
    return 0


def cmd_verify(args) -> int:
    spec = parse_space_spec(args.spec)
    report = suites.run_verify(spec, suite_filter=args.suite, tol=_tolerances(args),
                               max_rank=args.max_rank)
    _emit(report, args.format)
    return report.exit_code()


def cmd_tube(args) -> int:
    spec = parse_space_spec(args.spec)
    case = None
    try:
        from .tubes import canonical_case
        case = canonical_case(args.case)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if case == "CPk_in_CPr":
        ok = spec.family == "A"
    else:
        ok = tube_case_for(spec) == case
    if not ok:
        print(f"error: no isometric-Reeb-flow tube of case {case} over "
              f"{space_name(spec)} ({anchor_for('tubes.applicability')})", file=sys.stderr)
        return 2
    report = suites.run_tube(spec, case, args.radius, tol=_tolerances(args))
    _emit(report, args.format)
    return report.exit_code()


def cmd_report(args) -> int:
    worst = 0
    docs = []
    for text in DESK_SET:
        spec = parse_space_spec(text)
        report = suites.run_verify(spec, suite_filter=args.suite, tol=_tolerances(args),
                                   max_rank=args.max_rank)
        worst = max(worst, report.exit_code())
        if args.format == "json":
            docs.append(report.as_dict())
        else:
            _emit(report, "text")
            print()
    if args.format == "json":
        for doc in docs:
            rp.validate_report(doc)
        print(json.dumps({"schema_version": rp.SCHEMA_VERSION, "reports": docs}, indent=2))
    return worst


def _emit(report: rp.Report, fmt: str):
    if fmt == "json":
        print(rp.render_json(report))
    else:
        print(rp.render_text(report), end="")


if __name__ == "__main__":
    sys.exit(main())
