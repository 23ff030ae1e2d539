"""Command-line front end.

Subcommands: ``enumerate`` streams generated objects, ``check`` profiles a
table against requested properties, ``render`` draws contour plots and
ordering profiles, ``verify`` runs a named claim through the brute-force
engines, ``count`` prints closed-form counts.

Everything on standard output is machine-parseable (the declared text formats
or JSON); progress, counts, and timings go to standard error. Exit codes:
0 on success, 1 when a requested property or verification fails, 2 on usage
or parse errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from .core import (
    format_order,
    format_table,
    parse_order,
    parse_table_auto,
    table_to_json_dict,
)
from .generate import (
    count_uninorms,
    count_uninorms_by_neutral,
    enumerate_gspecs,
    generate_all_uninorms_gc,
)
from .oracle import enumerate_conservative, profile, theorem_names, verify_theorem
from .render import render_contour_dot, render_contour_text, render_profile
from .single_peaked import enumerate_single_peaked

_PROPERTY_NAMES = (
    "idempotent",
    "conservative",
    "symmetric",
    "nondecreasing",
    "associative",
    "bisymmetric",
    "has-neutral",
)


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="uninorms",
        description="construct, enumerate, check, and render idempotent "
                    "discrete uninorms on finite chains",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="stream generated objects")
    p.add_argument("kind",
                   choices=["uninorms", "single-peaked", "conservative", "gspecs"])
    p.add_argument("--n", type=int, required=True, help="chain size")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--output", default="-", help="output file, '-' for stdout")
    p.add_argument("--jobs", type=int, default=_default_jobs(),
                   help="accepted for interface uniformity; enumeration is "
                        "sequential so its order never depends on this")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("check", help="profile a table against properties")
    p.add_argument("input", help="table file (text or JSON), '-' for stdin")
    p.add_argument("--properties", default="",
                   help="comma-separated subset of: " + ", ".join(_PROPERTY_NAMES))
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("render", help="draw a contour plot or ordering profile")
    p.add_argument("input", help="table file, or order file for --style profile")
    p.add_argument("--style", choices=["text", "dot", "profile"], default="text")
    p.add_argument("--output", default="-")
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("verify", help="brute-force check a named claim")
    p.add_argument("--theorem", required=True,
                   help="one of: " + ", ".join(theorem_names()))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0,
                   help="seed for the sampled sweeps (default 0)")
    p.add_argument("--jobs", type=int, default=_default_jobs(),
                   help="worker processes; the report is identical for any value")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("count", help="closed-form uninorm counts")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--e", type=int, default=None, help="restrict to one neutral element")
    p.set_defaults(func=_cmd_count)

    return parser


def _default_jobs() -> int:
    return os.cpu_count() or 1


def _open_output(path: str):
    if path == "-":
        return sys.stdout, False
    return open(path, "w"), True


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _cmd_enumerate(args) -> int:
    n = args.n
    out, close = _open_output(args.output)
    count = 0
    try:
        if args.kind == "uninorms":
            for op in generate_all_uninorms_gc(n):
                _emit_table(out, op, args.format)
                count += 1
        elif args.kind == "conservative":
            for op in enumerate_conservative(n):
                _emit_table(out, op, args.format)
                count += 1
        elif args.kind == "single-peaked":
            for order in enumerate_single_peaked(n):
                if args.format == "json":
                    out.write(json.dumps(
                        {"n": n, "seq": list(order.seq)}, sort_keys=True) + "\n")
                else:
                    out.write(format_order(order))
                count += 1
        else:  # gspecs
            for spec in enumerate_gspecs(n):
                if args.format == "json":
                    out.write(json.dumps(
                        {"n": n, "e": spec.e, "g": list(spec.g)}, sort_keys=True) + "\n")
                else:
                    out.write(f"{spec.e} {' '.join(str(v) for v in spec.g)}\n")
                count += 1
    finally:
        if close:
            out.close()
    print(f"count: {count}", file=sys.stderr)
    return 0


def _emit_table(out, op, fmt: str) -> None:
    if fmt == "json":
        out.write(json.dumps(table_to_json_dict(op), sort_keys=True) + "\n")
    else:
        out.write(format_table(op) + "\n")


def _cmd_check(args) -> int:
    requested = [p for p in args.properties.split(",") if p]
    for name in requested:
        if name not in _PROPERTY_NAMES:
            raise ValueError(
                f"unknown property {name!r}; known: {', '.join(_PROPERTY_NAMES)}"
            )
    op = parse_table_auto(_read_input(args.input))
    prof = profile(op)
    data = prof.to_dict()
    data["n"] = op.n
    print(json.dumps(data, sort_keys=True, indent=2))
    holds = {
        "idempotent": prof.idempotent,
        "conservative": prof.conservative,
        "symmetric": prof.symmetric,
        "nondecreasing": prof.nondecreasing,
        "associative": prof.associative,
        "bisymmetric": prof.bisymmetric,
        "has-neutral": prof.neutral is not None,
    }
    failed = [name for name in requested if not holds[name]]
    if failed:
        print(f"failed: {', '.join(failed)}", file=sys.stderr)
        return 1
    return 0


def _cmd_render(args) -> int:
    text = _read_input(args.input)
    if args.style == "profile":
        rendered = render_profile(parse_order(text))
    else:
        op = parse_table_auto(text)
        rendered = render_contour_text(op) if args.style == "text" else render_contour_dot(op)
    out, close = _open_output(args.output)
    try:
        out.write(rendered)
    finally:
        if close:
            out.close()
    return 0


def _cmd_verify(args) -> int:
    report = verify_theorem(args.theorem, args.n, seed=args.seed, jobs=args.jobs)
    runtime = report.pop("runtime_seconds")
    print(json.dumps(report, sort_keys=True, indent=2))
    print(f"runtime: {runtime:.3f}s", file=sys.stderr)
    return 0 if report["ok"] else 1


def _cmd_count(args) -> int:
    if args.e is None:
        data = {"n": args.n, "count": count_uninorms(args.n)}
    else:
        data = {"n": args.n, "e": args.e,
                "count": count_uninorms_by_neutral(args.n, args.e)}
    print(json.dumps(data, sort_keys=True))
    return 0


if __name__ == "__main__":
    sys.exit(main())
