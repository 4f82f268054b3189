"""Command-line front end.

Machine output is JSON on stdout; ``--pretty`` switches to plain text.
Exit status: 0 on success, 1 on domain errors or failed verification,
2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence

from .approximation import approximate, pawlak_roughness
from .measures import CATALOG as PARTITION_MEASURES
from .partitions import Universe, bell_number, enumerate_partitions, parse_partition, parse_subset
from .roughness import (
    check_propositions,
    get_roughness,
    verify_roughness_axioms,
    verify_weak_roughness_axioms,
)
from .measures import verify_partition_measure
from .report import AxiomReport
from .table import indiscernibility_partition, load_table

VERIFY_KINDS = ("partition-measure", "roughness", "weak", "propositions")


def fmt(x: float) -> float:
    """Round to six significant digits for stable output."""
    return float(f"{x:.6g}")


def _attrs(text: str) -> list[str]:
    return [a.strip() for a in text.split(",") if a.strip()]


def _emit(payload, pretty: bool, text: str | None = None) -> None:
    if pretty and text is not None:
        print(text)
    else:
        print(json.dumps(payload))


def _partition_and_set(args):
    if args.table is not None:
        if args.attrs is None:
            raise ValueError("--table requires --attrs")
        p = indiscernibility_partition(load_table(args.table), _attrs(args.attrs))
    elif args.partition is not None:
        p = parse_partition(args.partition)
    else:
        raise ValueError("give either --partition or --table with --attrs")
    return p, parse_subset(args.set, p.universe)


def cmd_approx(args) -> int:
    p, a = _partition_and_set(args)
    out = approximate(p, a).to_dict()
    for key in ("accuracy", "roughness"):
        out[key] = fmt(out[key])
    text = "\n".join(f"{k:>16}: {','.join(v) if isinstance(v, list) else v}" for k, v in out.items())
    _emit(out, args.pretty, text)
    return 0


def cmd_roughness(args) -> int:
    p, a = _partition_and_set(args)
    b = get_roughness(args.measure)
    bp = pawlak_roughness(p, a)
    out = {
        "measure": b.name,
        "partition": p.render(),
        "set": a.render(),
        "value": fmt(b.evaluate(p, a)),
        "beta_P": fmt(float(bp)),
        "beta_P_exact": str(bp),
        "h": None,
        "h_max": None,
    }
    if b.partition_measure is not None:
        out["partition_measure"] = b.partition_measure.name
        out["h"] = fmt(b.partition_measure.evaluate(p))
        out["h_max"] = fmt(b.partition_measure.max_on(p.universe))
    text = "\n".join(f"{k:>17}: {v}" for k, v in out.items())
    _emit(out, args.pretty, text)
    return 0


def _render_report(report: AxiomReport) -> str:
    lines = [f"{report.kind} check of {report.measure} at n={report.n}: {'PASS' if report.passed else 'FAIL'}"]
    for axiom in report.axioms:
        status = "pass" if axiom.passed else f"FAIL ({axiom.violations} violations)"
        lines.append(f"  {axiom.id:<6} {status:<24} {axiom.description}")
        for ce in axiom.counterexamples[:3]:
            lines.append(f"         e.g. {ce}")
    lines.append(f"  elapsed {report.elapsed_ms:.1f} ms")
    return "\n".join(lines)


def cmd_verify(args) -> int:
    u = Universe.of_size(args.n)
    if args.kind == "partition-measure":
        if args.measure in PARTITION_MEASURES:
            h = PARTITION_MEASURES[args.measure]
        else:
            h = get_roughness(args.measure).partition_measure
            if h is None:
                raise ValueError(f"{args.measure} is not backed by a partition measure")
        report = verify_partition_measure(h, u)
    else:
        b = get_roughness(args.measure)
        check = {
            "roughness": verify_roughness_axioms,
            "weak": verify_weak_roughness_axioms,
            "propositions": check_propositions,
        }[args.kind]
        report = check(b, u)
    _emit(report.to_dict(), args.pretty, _render_report(report))
    return 0 if report.passed else 1


def cmd_enumerate(args) -> int:
    if args.count_only:
        print(json.dumps(bell_number(args.n)))
        return 0
    literals = [p.render() for p in enumerate_partitions(Universe.of_size(args.n))]
    _emit({"n": args.n, "count": len(literals), "partitions": literals}, args.pretty, "\n".join(literals))
    return 0


def cmd_table_partitions(args) -> int:
    attrs = _attrs(args.attrs)
    p = indiscernibility_partition(load_table(args.table), attrs)
    _emit({"attrs": attrs, "partition": p.render(), "blocks": len(p)}, args.pretty, p.render())
    return 0


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="roughset", description="Rough-set approximations and roughness measures.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--pretty", action="store_true", help="human-readable output instead of JSON")

    def add_space(p):
        p.add_argument("--partition", help='partition literal, e.g. "a1|a2,a3|a4,a5"')
        p.add_argument("--table", help="CSV information table (first column is the object id)")
        p.add_argument("--attrs", help="comma-separated attribute names used with --table")
        p.add_argument("--set", required=True, help='subset literal, e.g. "a1,a2,a3,a4"')

    p = sub.add_parser("approx", help="lower/upper approximation of a set")
    add_space(p)
    add_common(p)
    p.set_defaults(func=cmd_approx)

    p = sub.add_parser("roughness", help="evaluate a named roughness measure")
    p.add_argument("--measure", required=True)
    add_space(p)
    add_common(p)
    p.set_defaults(func=cmd_roughness)

    p = sub.add_parser("verify", help="exhaustively check axioms at a universe size")
    p.add_argument("--kind", required=True, choices=VERIFY_KINDS)
    p.add_argument("--measure", required=True)
    p.add_argument("--n", type=_positive, default=5)
    add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="list all partitions of {1..n}")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--count-only", action="store_true", help="print only the Bell number")
    add_common(p)
    p.set_defaults(func=cmd_enumerate)

    table = sub.add_parser("table", help="information-table utilities")
    table_sub = table.add_subparsers(dest="table_command", required=True)
    p = table_sub.add_parser("partitions", help="indiscernibility partition of selected attributes")
    p.add_argument("--table", required=True)
    p.add_argument("--attrs", required=True)
    add_common(p)
    p.set_defaults(func=cmd_table_partitions)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError) as exc:
        message = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"roughset: error: {message}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
