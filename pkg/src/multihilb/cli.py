"""Command-line interface.

Exit codes: 0 success, 1 a check failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from pathlib import Path

from . import catalog
from .hilbert import DegreeBox, hilbert_table, stabilization_corner
from .lines import (
    NegativeMultiplicityError,
    corner_slice,
    geometric_r_profile,
    hilbert_r_profile,
)
from .hilbert import difference_sequence
from .points import InputError, PointSet, format_point_set, parse_point_set, projection_counts
from .verify import run_checks

EXIT_OK, EXIT_CHECK_FAILED, EXIT_INPUT = 0, 1, 2


class UsageError(Exception):
    pass


def _parse_degree(text: str) -> tuple[int, ...]:
    try:
        d = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise UsageError(f"bad multidegree {text!r}; expected comma-separated naturals") from None
    if any(a < 0 for a in d):
        raise UsageError(f"multidegree {text!r} has a negative entry")
    return d


def load_points(args) -> PointSet:
    if args.example:
        if args.input:
            raise UsageError("give either an input file or --example, not both")
        try:
            return catalog.builtin_example(args.example)
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
    if not args.input:
        raise UsageError("an input file or --example is required")
    if args.input == "-":
        text = sys.stdin.read()
        fmt = args.input_format or "plain"
    else:
        path = Path(args.input)
        try:
            text = path.read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from None
        fmt = args.input_format or ("json" if path.suffix == ".json" else "plain")
    return parse_point_set(text, fmt)


def render_layers(table) -> str:
    """Print the table as 2-D layers: rows axis 0, columns axis 1.

    Remaining axes index the layers.
    """
    upper = table.box.upper
    r = len(upper)
    corner = table.corner
    out = [
        f"# H_X over box {_tup(upper)}; |X| = {table.point_count}; t = {_tup(table.projection_counts)}",
    ]
    if corner is not None:
        out.append(
            f"# stabilization corner {_tup(corner)}: H(d) = H(min(d, corner)) componentwise"
        )
    layer_ranges = [range(u + 1) for u in upper[2:]]
    for layer in itertools.product(*layer_ranges):
        block = table.values[(slice(None), slice(None)) + layer]
        width = max(len(str(v)) for v in block.flat)
        out.append("")
        if r == 3:
            out.append(f"k = {layer[0]}")
        elif r > 3:
            out.append(f"layer {_tup(layer)}")
        for row in block:
            out.append(" ".join(str(v).rjust(width) for v in row))
    return "\n".join(out) + "\n"


def _tup(t) -> str:
    return "(" + ",".join(str(v) for v in t) + ")"


def cmd_hf(args) -> int:
    x = load_points(args)
    if args.box:
        box = _parse_degree(args.box)
        if len(box) != x.arity:
            raise UsageError(f"--box has {len(box)} entries, points have arity {x.arity}")
    else:
        box = tuple(c + 1 for c in stabilization_corner(x))
    table = hilbert_table(x, DegreeBox(box))
    if args.format == "json":
        sys.stdout.write(json.dumps(table.to_dict()) + "\n")
    else:
        sys.stdout.write(render_layers(table))
    return EXIT_OK


def axis_report(x: PointSet, axis: int) -> dict:
    geo = geometric_r_profile(x, axis)
    fixed = corner_slice(x, axis)
    d = difference_sequence(x, fixed, axis, len(x)).values
    try:
        hil, error = hilbert_r_profile(x, axis), None
    except NegativeMultiplicityError as exc:
        hil, error = None, str(exc)
    return {
        "axis": axis,
        "corner_slice": list(fixed),
        "d_sequence": list(d),
        "hilbert": None if hil is None else {str(n): c for n, c in hil.counts.items()},
        "geometric": {str(n): c for n, c in geo.counts.items()},
        "agree": hil == geo,
        "error": error,
        "_text": (str(hil) if hil else "(failed)", str(geo)),
    }


def _trim_d(d: list[int]) -> list[int]:
    # keep everything up to and including the first trailing zero
    end = len(d)
    while end > 1 and d[end - 1] == 0 and d[end - 2] == 0:
        end -= 1
    return d[:end]


def cmd_lines(args) -> int:
    x = load_points(args)
    if args.all_axes:
        axes = list(range(x.arity))
    else:
        axis = x.arity - 1 if args.axis is None else args.axis
        if not 0 <= axis < x.arity:
            raise UsageError(f"--axis {axis} out of range for arity {x.arity}")
        axes = [axis]
    reports = [axis_report(x, a) for a in axes]
    ok = all(rep["agree"] for rep in reports)
    if args.format == "json":
        payload = {
            "point_count": len(x),
            "t": list(projection_counts(x)),
            "axes": [{k: v for k, v in rep.items() if not k.startswith("_")} for rep in reports],
        }
        sys.stdout.write(json.dumps(payload) + "\n")
    else:
        lines = [f"# |X| = {len(x)}; t = {_tup(projection_counts(x))}"]
        for rep in reports:
            hil_text, geo_text = rep["_text"]
            lines += [
                f"axis {rep['axis']}: T = {_tup(rep['corner_slice'])}",
                f"  d: {' '.join(str(v) for v in _trim_d(rep['d_sequence']))}",
                f"  hilbert:   {hil_text}",
                f"  geometric: {geo_text}",
                f"  agree={'true' if rep['agree'] else 'false'}",
            ]
            if rep["error"]:
                lines.append(f"  error: {rep['error']}")
        sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def cmd_verify(args) -> int:
    x = load_points(args)
    report = run_checks(x)
    if args.json:
        sys.stdout.write(json.dumps(report.to_dict()) + "\n")
    else:
        for c in report.checks:
            line = f"{'PASS' if c.passed else 'FAIL'} {c.name}: {c.detail}"
            if not c.passed and c.witness is not None:
                line += f" [witness {c.witness}]"
            sys.stdout.write(line + "\n")
        n_fail = len(report.failures)
        sys.stdout.write(
            f"{len(report.checks) - n_fail}/{len(report.checks)} checks passed\n"
        )
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def cmd_random(args) -> int:
    try:
        x = catalog.random_point_set(
            args.arity, args.count, args.pool, args.seed, allow_infinity=args.allow_infinity
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    sys.stdout.write(format_point_set(x, args.output_format))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multihilb",
        description="Multigraded Hilbert functions of points in (P^1)^r.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("input", nargs="?", help="point file ('-' for stdin)")
        p.add_argument("--example", metavar="ID", help=f"builtin set: {', '.join(catalog.builtin_ids())}")
        p.add_argument("--input-format", choices=["plain", "json"],
                       help="default: json for *.json files, plain otherwise")

    p = sub.add_parser("hf", help="tabulate the Hilbert function over a box")
    add_input(p)
    p.add_argument("--box", help="upper corner, e.g. 3,3,2 (default: corner + 1)")
    p.add_argument("--format", choices=["layers", "json"], default="layers")
    p.set_defaults(func=cmd_hf)

    p = sub.add_parser("lines", help="count points on lines from the Hilbert function")
    add_input(p)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--axis", type=int, help="free axis (default: last)")
    group.add_argument("--all-axes", action="store_true")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_lines)

    p = sub.add_parser("verify", help="run the full invariant suite")
    add_input(p)
    p.add_argument("--json", action="store_true", help="machine-readable report")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("random", help="print a seeded random point set")
    p.add_argument("--arity", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--pool", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--allow-infinity", action="store_true", help="include [0:1] in the pool")
    p.add_argument("--output-format", choices=["plain", "json"], default="plain")
    p.set_defaults(func=cmd_random)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
