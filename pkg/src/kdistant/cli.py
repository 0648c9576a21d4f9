"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import sys

from kdistant import counting, orthopoly, series
from kdistant.charlier import InvalidDiagramError, from_charlier, parse_diagram, to_charlier
from kdistant.involution import phi, phi_trace
from kdistant.partition import (InvalidPartitionError, PartitionSyntaxError, parse_partition,
                                statistics)
from kdistant.verify import SUITES


class UsageError(Exception):
    pass


def _k_value(text: str):
    if text in ("inf", "infinity", "∞"):
        return None
    try:
        k = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"k must be a nonnegative integer or 'inf', got {text!r}")
    if k < 0:
        raise argparse.ArgumentTypeError("k must be nonnegative")
    return k


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError("expected a nonnegative integer")
    return v


def _dump(obj) -> str:
    return json.dumps(obj, indent=1, ensure_ascii=False)


def _type_dict(cls) -> dict:
    return {"openers": sorted(cls.openers), "closers": sorted(cls.closers),
            "singletons": sorted(cls.singletons), "transients": sorted(cls.transients)}


def cmd_stats(args) -> tuple[int, str]:
    pi = parse_partition(args.partition, args.n)
    rec = statistics(pi, args.k)
    return 0, _dump({"partition": str(pi), "n": pi.n, "k": args.k, "dcr": rec.dcr,
                     "dne": rec.dne, "max_crossing": rec.max_crossing,
                     "max_nesting": rec.max_nesting, "type": _type_dict(pi.classification)})


def cmd_involute(args) -> tuple[int, str]:
    pi = parse_partition(args.partition, args.n)
    out = {"partition": str(pi), "k": args.k}
    if args.trace:
        image, rows = phi_trace(pi, args.k)
        out["trace"] = rows
    else:
        image = phi(pi, args.k)
    out["image"] = str(image)
    return 0, _dump(out)


def cmd_charlier(args) -> tuple[int, str]:
    if (args.partition is None) == (args.diagram is None):
        raise UsageError("give exactly one of --partition or --diagram")
    if args.partition is not None:
        pi = parse_partition(args.partition, args.n)
        return 0, _dump({"partition": str(pi), "diagram": str(to_charlier(pi))})
    d = parse_diagram(args.diagram)
    return 0, _dump({"diagram": str(d), "partition": str(from_charlier(d))})


def cmd_count(args) -> tuple[int, str]:
    if args.method == "brute":
        value = counting.count_brute(args.family, args.n, args.k, jobs=args.jobs)
    else:
        value = counting.count_fast(args.family, args.n, args.k)
    return 0, _dump({"family": args.family, "n": args.n,
                     "k": "inf" if args.k is None else args.k,
                     "method": args.method, "count": str(value)})


def cmd_table(args) -> tuple[int, str]:
    return 0, counting.emit_table(args.family, args.max_n, args.max_k, args.format,
                                  args.paper_layout).rstrip("\n")


def cmd_gf(args) -> tuple[int, str]:
    s = series.GENERATING_FUNCTIONS[args.name](args.order)
    return 0, _dump(s.to_strings())


def cmd_moments(args) -> tuple[int, str]:
    depth = args.depth
    mu = orthopoly.moment_source(args.source, 2 * depth)
    try:
        rec = orthopoly.recurrence_from_moments(mu, depth)
        out = {"b": [str(v) for v in rec.b], "lambda": [str(v) for v in rec.lam],
               "lambda_flags": orthopoly.lambda_flags(rec)}
    except orthopoly.NotQuasiDefiniteError as exc:
        out = {"error": str(exc), "depth": exc.depth}
    return 0, _dump({"source": args.source, "depth": depth,
                     "moments": [str(m) for m in mu], **out})


def cmd_verify(args) -> tuple[int, str]:
    report = SUITES[args.suite](args.n, args.k)
    return (0 if report.status == "pass" else 1), _dump(report.to_dict())


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kdistant",
                                description="k-distant crossings and nestings of partitions")
    sub = p.add_subparsers(dest="command", required=True)

    def partition_args(sp, required=True):
        sp.add_argument("--partition", required=required, help='e.g. "{1,5}{2,4,9}{3}"')
        sp.add_argument("--n", type=_nonneg, help="ground set size (default: largest element)")

    sp = sub.add_parser("stats", help="statistics of one partition")
    partition_args(sp)
    sp.add_argument("--k", type=_nonneg, required=True)
    sp.set_defaults(func=cmd_stats)

    sp = sub.add_parser("involute", help="apply the crossing/nesting involution")
    partition_args(sp)
    sp.add_argument("--k", type=_nonneg, required=True)
    sp.add_argument("--trace", action="store_true", help="include the step-by-step traces")
    sp.set_defaults(func=cmd_involute)

    sp = sub.add_parser("charlier", help="encode a partition or decode a diagram")
    partition_args(sp, required=False)
    sp.add_argument("--diagram", help='tokens such as "U U H0 D2 D1"')
    sp.set_defaults(func=cmd_charlier)

    sp = sub.add_parser("count", help="count k-distant noncrossing objects")
    sp.add_argument("--family", choices=counting.FAMILIES, required=True)
    sp.add_argument("--n", type=_nonneg, required=True)
    sp.add_argument("--k", type=_k_value, required=True, help="nonnegative integer or 'inf'")
    sp.add_argument("--method", choices=("brute", "fast"), default="fast")
    sp.add_argument("--jobs", type=_nonneg, default=1, help="worker processes for brute force")
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("table", help="table of counts over n and k")
    sp.add_argument("--family", choices=counting.FAMILIES, required=True)
    sp.add_argument("--max-n", type=_nonneg, required=True)
    sp.add_argument("--max-k", type=_nonneg, required=True)
    sp.add_argument("--format", choices=("csv", "json", "text"), default="csv")
    sp.add_argument("--paper-layout", action="store_true",
                    help="blank the cells past the first one reaching the unrestricted count")
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("gf", help="generating function coefficients")
    sp.add_argument("--name", choices=sorted(series.GENERATING_FUNCTIONS), required=True)
    sp.add_argument("--order", type=_nonneg, default=20)
    sp.set_defaults(func=cmd_gf)

    sp = sub.add_parser("moments", help="recurrence coefficients of a moment sequence")
    sp.add_argument("--source", choices=orthopoly.MOMENT_SOURCES, required=True)
    sp.add_argument("--depth", type=_nonneg, default=12)
    sp.set_defaults(func=cmd_moments)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("--suite", choices=sorted(SUITES), required=True)
    sp.add_argument("--n", type=_nonneg, help="size bound (or order/depth)")
    sp.add_argument("--k", type=_nonneg, help="distance bound (charlier: diagram length)")
    sp.set_defaults(func=cmd_verify)
    return p


def run(argv: list[str] | None = None) -> tuple[int, str]:
    """Parse ``argv`` and execute; returns the exit code and the stdout text."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), ""
    try:
        return args.func(args)
    except PartitionSyntaxError as exc:
        return 2, _dump({"error": str(exc), "position": exc.position})
    except InvalidDiagramError as exc:
        return 2, _dump({"error": str(exc), "index": exc.index})
    except (InvalidPartitionError, UsageError, ValueError) as exc:
        return 2, _dump({"error": str(exc)})


def main(argv: list[str] | None = None) -> int:
    code, out = run(argv)
    if out:
        stream = sys.stdout if code != 2 else sys.stderr
        print(out, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
