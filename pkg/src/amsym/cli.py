"""Command-line interface.

Usage:
    amsym blocks 9
    amsym am-table --core 2,1 --w 3
    amsym restrict 8,1 --format json
    amsym verify t37 --max-n 12

Exit codes: 0 pass, 1 verification failure, 2 usage error, 3 resource limit.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .am import BrauerCharLabel, am_star, restriction_constituents
from .blocks import BlockId, blocks_of, height_zero, hook_sequence, irr_block
from .errors import InvalidBlockError, ResourceError
from .partitions import format_partition, parse_partition
from .sylow2 import DEFAULT_BUDGET, K_MAX
from .verify import VERIFIERS, SweepConfig

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _env(name: str, default):
    raw = os.environ.get(f"AMSYM_{name}")
    if raw is None:
        return default
    return type(default)(raw) if not isinstance(default, str) else raw


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--max-n", type=int, default=_env("MAX_N", 16))
    p.add_argument("--k-max", type=int, default=_env("K_MAX", K_MAX))
    p.add_argument("--threads", type=int, default=_env("THREADS", 1))
    p.add_argument("--format", choices=("json", "tsv", "pretty"), default=_env("FORMAT", "pretty"))
    p.add_argument("--budget", type=int, default=_env("BUDGET", DEFAULT_BUDGET))
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="amsym", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("blocks", parents=[common], help="list the 2-blocks of S_n")
    p.add_argument("n", type=int)

    p = sub.add_parser("am-table", parents=[common], help="height-zero characters and their correspondents")
    p.add_argument("--core", required=True, help="2-core, e.g. 2,1 (empty string for the empty core)")
    p.add_argument("--w", type=int, required=True)
    p.add_argument("--strict", action="store_true", help="reject weight zero instead of printing the core")

    p = sub.add_parser("restrict", parents=[common], help="restriction to the defect-group normalizer")
    p.add_argument("partition")

    p = sub.add_parser("verify", parents=[common], help="exhaustive theorem sweep")
    p.add_argument("theorem")
    p.add_argument("--k", default=None, help="levels for l313/l314, e.g. 2,3,4")
    return parser


def _shapes_text(shapes) -> str:
    return "(" + ",".join(str(s) for s in shapes) + ")"


def _print_rows(fmt: str, header: list[str], rows: list[list], payload) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    elif fmt == "tsv":
        print("\t".join(header))
        for row in rows:
            print("\t".join(str(x) for x in row))
    else:
        widths = [max(len(str(x)) for x in col) for col in zip(header, *rows)]
        print("  ".join(h.ljust(w) for h, w in zip(header, widths)))
        for row in rows:
            print("  ".join(str(x).ljust(w) for x, w in zip(row, widths)))


def block_report(B: BlockId) -> dict:
    h0 = height_zero(B)
    entries = []
    for lam in h0:
        seq = hook_sequence(lam)
        entries.append({"partition": list(lam), "hook_sequence": seq.to_json(), "legs": list(seq.legs)})
    return {
        "core": list(B.core),
        "weight": B.weight,
        "n": B.n,
        "defect": B.defect,
        "irr_count": len(irr_block(B)),
        "height_zero": entries,
    }


def cmd_blocks(args) -> int:
    if args.n < 0 or args.n > args.max_n:
        raise UsageError(f"n={args.n} outside 0..{args.max_n} (raise --max-n)")
    blocks = blocks_of(args.n)
    reports = [block_report(B) for B in blocks]
    rows = [
        [str(B), format_partition(B.core), B.weight, B.defect, r["irr_count"], len(r["height_zero"])]
        for B, r in zip(blocks, reports)
    ]
    header = ["block", "core", "weight", "defect", "irr_count", "irr0_count"]
    _print_rows(args.format, header, rows, reports)
    return EXIT_OK


def am_table_rows(B: BlockId) -> list[dict]:
    """Height-zero members with hook sequence, legs and correspondent, ordered by reversed legs."""
    if B.weight == 0:
        return [{"lambda": B.core, "shapes": (), "legs": (), "star": BrauerCharLabel((), B.core)}]
    rows = []
    for lam in height_zero(B):
        seq = hook_sequence(lam)
        rows.append({"lambda": lam, "shapes": seq.shapes, "legs": seq.legs, "star": am_star(lam)})
    rows.sort(key=lambda r: tuple(reversed(r["legs"])))
    return rows


def cmd_am_table(args) -> int:
    try:
        B = BlockId(parse_partition(args.core), args.w)
    except (InvalidBlockError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    if B.n > args.max_n:
        raise UsageError(f"n={B.n} exceeds --max-n {args.max_n}")
    if B.weight == 0 and args.strict:
        raise UsageError(f"{B} has weight zero")
    rows = am_table_rows(B)
    payload = {
        "block": str(B),
        "rows": [
            {
                "lambda": list(r["lambda"]),
                "hook_sequence": [s.to_json() for s in r["shapes"]],
                "legs": list(r["legs"]),
                "star": r["star"].to_json(),
            }
            for r in rows
        ],
    }
    table = [
        [format_partition(r["lambda"]), _shapes_text(r["shapes"]), "(" + ",".join(map(str, r["legs"])) + ")", str(r["star"])]
        for r in rows
    ]
    _print_rows(args.format, ["lambda", "hook_sequence", "legs", "star"], table, payload)
    return EXIT_OK


def cmd_restrict(args) -> int:
    try:
        lam = parse_partition(args.partition)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = restriction_constituents(lam, budget=args.budget, k_max=args.k_max)
    payload = report.to_json()
    if args.format == "json":
        print(json.dumps(payload, indent=2))
        return EXIT_OK
    rows = [
        [_shapes_text(label.shapes), format_partition(label.core), m, "*" if label == report.star else ""]
        for label, m in sorted(report.constituents.items(), key=lambda kv: kv[0].shapes)
    ]
    if args.format == "pretty":
        print(f"lambda {format_partition(lam)} in {report.block}, height {report.height}")
        print(f"{report.count} height-zero constituent(s); predicted {report.predicted}")
    _print_rows(args.format, ["shapes", "core", "mult", "star"], rows, payload)
    if args.format == "pretty":
        print("checks: " + " ".join(f"{k}={v}" for k, v in report.checks.items()))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.theorem not in VERIFIERS:
        raise UsageError(f"unknown theorem id {args.theorem!r}; choose from {sorted(VERIFIERS)}")
    try:
        ks = tuple(int(x) for x in args.k.split(",")) if args.k else None
        cfg = SweepConfig(max_n=args.max_n, k_max=args.k_max, threads=args.threads, budget=args.budget, ks=ks)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    res = VERIFIERS[args.theorem](cfg)
    if args.format == "json":
        print(json.dumps(res.to_json(), indent=2))
    elif args.format == "tsv":
        print("theorem\tpassed\tcases\tfailures")
        print(f"{res.theorem}\t{res.passed}\t{res.cases}\t{len(res.failures)}")
    else:
        status = "PASS" if res.passed else "FAIL"
        print(f"{res.theorem}: {status} ({res.cases} cases, {len(res.failures)} failures)")
        for note in res.notes:
            print(f"  {note}")
        for failure in res.failures:
            print(json.dumps(failure))
    return EXIT_OK if res.passed else EXIT_FAIL


COMMANDS = {
    "blocks": cmd_blocks,
    "am-table": cmd_am_table,
    "restrict": cmd_restrict,
    "verify": cmd_verify,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
