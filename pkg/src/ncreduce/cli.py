"""
Command-line front end.

    ncreduce count --n 5 --k 3 --m 2
    ncreduce reduce --partition "(1,3,5)(2)(4)"
    ncreduce motzkin --partition "(1,2,6)(3,4)(5)"
    ncreduce verify --identity eq2 --max-n 8

Exit codes: 0 success, 1 domain error, 2 usage error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from . import arcs as arcmod
from .enumeration import FamilyFilter, count_family, generate
from .errors import PartitionError
from .identities import VERIFIERS
from .motzkin import parse_path, partition_to_path, path_to_partition
from .partitions import INFINITY, SetPartition, format_partition, parse_partition
from .reduction import expand_arcs, expand_partition, reduce_arcs, reduce_partition


def _regularity_arg(text: str) -> float | int:
    if text.lower() in ("inf", "infinity"):
        return INFINITY
    try:
        m = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid regularity {text!r}") from None
    if m < 1:
        raise argparse.ArgumentTypeError("m must be >= 1")
    return m


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def _positive(text: str) -> int:
    v = _nonneg(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def partition_json(p: SetPartition) -> str:
    return json.dumps({"n": p.n, "blocks": [list(b) for b in p.blocks]}, separators=(",", ":"))


def _emit_partition(p: SetPartition, fmt: str, out: TextIO) -> None:
    print(partition_json(p) if fmt == "json" else format_partition(p), file=out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ncreduce", description="Reduction of m-regular noncrossing partitions.")
    sub = parser.add_subparsers(dest="command", required=True)

    def family_args(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--n", type=_nonneg, required=True)
        sp.add_argument("--k", type=_nonneg)
        sp.add_argument("--m", type=_regularity_arg, default=1, help="regularity bound (integer or 'inf')")
        sp.add_argument("--noncrossing", action="store_true")
        sp.add_argument("--poor", action="store_true")

    sp = sub.add_parser("enumerate", help="list partitions in a family")
    family_args(sp)
    sp.add_argument("--format", choices=("text", "json"), default="text")

    sp = sub.add_parser("count", help="count partitions in a family")
    family_args(sp)

    sp = sub.add_parser("reduce", help="apply the reduction algorithm")
    sp.add_argument("--partition", required=True)
    sp.add_argument("--arcs", action="store_true", help="emit the reduced arc diagram as JSON")
    sp.add_argument("--format", choices=("text", "json"), default="text")

    sp = sub.add_parser("expand", help="invert the reduction")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--partition")
    g.add_argument("--arcs", help="arc diagram JSON")
    sp.add_argument("--format", choices=("text", "json"), default="text")

    sp = sub.add_parser("motzkin", help="noncrossing partition <-> 2-Motzkin path")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--partition")
    g.add_argument("--path")
    sp.add_argument("--format", choices=("text", "json"), default="text")

    sp = sub.add_parser("verify", help="exhaustively check an identity")
    sp.add_argument("--identity", choices=sorted(VERIFIERS), required=True)
    sp.add_argument("--max-n", type=_positive, required=True)
    sp.add_argument("--jobs", type=_positive, default=1)
    sp.add_argument("--brute-max", type=_nonneg, default=11, help="narayana: brute-force bound")
    sp.add_argument("--census-max", type=_nonneg, default=10, help="eq5: loop-census bound")

    sp = sub.add_parser("render", help="ASCII arc diagram")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--partition")
    g.add_argument("--arcs", help="arc diagram JSON")
    return parser


def _verify(args: argparse.Namespace, out: TextIO) -> int:
    kwargs = {"jobs": args.jobs}
    if args.identity == "narayana":
        kwargs["brute_max"] = args.brute_max
    elif args.identity == "eq5":
        kwargs["census_max"] = args.census_max
    if args.identity in ("eq2", "eq3") and args.max_n < 2:
        raise PartitionError("--max-n must be at least 2 for this identity")
    failed = 0
    for report in VERIFIERS[args.identity](args.max_n, **kwargs):
        print(report.to_json(), file=out)
        failed += not report.passed
    return 3 if failed else 0


def _dispatch(args: argparse.Namespace, out: TextIO) -> int:
    cmd = args.command
    if cmd in ("enumerate", "count"):
        flt = FamilyFilter(k=args.k, m=args.m, noncrossing=args.noncrossing, poor=args.poor)
        if cmd == "count":
            print(count_family(args.n, flt), file=out)
        else:
            for p in generate(args.n, flt):
                _emit_partition(p, args.format, out)
    elif cmd == "reduce":
        p = parse_partition(args.partition)
        if args.arcs:
            print(arcmod.to_json(reduce_arcs(arcmod.from_partition(p))), file=out)
        else:
            _emit_partition(reduce_partition(p), args.format, out)
    elif cmd == "expand":
        if args.partition is not None:
            q = expand_partition(parse_partition(args.partition))
        else:
            q = arcmod.to_partition(expand_arcs(arcmod.from_json(args.arcs)))
        _emit_partition(q, args.format, out)
    elif cmd == "motzkin":
        if args.partition is not None:
            print(partition_to_path(parse_partition(args.partition)), file=out)
        else:
            _emit_partition(path_to_partition(parse_path(args.path)), args.format, out)
    elif cmd == "verify":
        return _verify(args, out)
    elif cmd == "render":
        if args.partition is not None:
            d = arcmod.from_partition(parse_partition(args.partition))
        else:
            d = arcmod.from_json(args.arcs)
        print(arcmod.render_ascii(d), file=out)
    return 0


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _dispatch(args, out)
    except PartitionError as exc:
        print(f"ncreduce: {type(exc).__name__}: {exc}", file=err)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
