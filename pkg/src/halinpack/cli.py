"""Command-line entry point: generate / color / verify / oracle / bench.

Thin adapters over the library modules; no algorithmic logic lives here.
Exit codes are uniform: 0 for success (ok / feasible), 1 for a semantic
negative (violations, infeasible, degree precondition), 2 for usage, parse,
or validation errors.  "-" means standard input or output for path flags.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import _kernels
from .bench import doubling_ratios, emit_csv, linear_fit_r2, run_scaling
from .colorer import (
    ColoringFormatError,
    MaxDegreeExceededError,
    coloring_to_text,
    coloring_from_text,
    run_pipeline,
    trace_lines,
)
from .generator import (
    GeneratorConfig,
    InfeasibleConfigError,
    gen_cubic_caterpillar,
    gen_random_halin,
    gen_wheel,
)
from .graph import GraphFormatError, HalinGraphError, graph_from_text, graph_to_text
from .oracle import OracleTooLargeError, s_packing_colorable
from .verifier import (
    PackingSequence,
    PartialColoringError,
    UnmappedColorError,
    verify_packing,
)

DEFAULT_CLASS_SPEC = "1:1,1p:1,2a:2,2b:2,2c:2"
DEFAULT_BENCH_SIZES = "10000,20000,40000,80000,160000"


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _write_text(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _fail(message: str, code: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _load_graph(path: str):
    return graph_from_text(_read_text(path))


def _parse_class_spec(spec: str) -> dict[str, int]:
    classes: dict[str, int] = {}
    for item in spec.split(","):
        name, _, radius = item.partition(":")
        if not name or not radius:
            raise ValueError(f"bad class entry {item!r}, expected name:radius")
        classes[name.strip()] = int(radius)
    if not classes:
        raise ValueError("empty class spec")
    return classes


def cmd_generate(args: argparse.Namespace) -> int:
    try:
        if args.family == "wheel":
            g = gen_wheel(args.leaves)
        elif args.family == "cubic_caterpillar":
            g = gen_cubic_caterpillar(max(1, args.leaves - 2))
        else:
            cfg = GeneratorConfig(
                target_leaves=args.leaves, max_degree=args.max_degree, seed=args.seed
            )
            g = gen_random_halin(cfg)
    except (InfeasibleConfigError, HalinGraphError) as e:
        return _fail(str(e), 2)
    _write_text(args.output, graph_to_text(g))
    print(f"n_total={g.n_total} max_degree={g.max_degree}", file=sys.stderr)
    return 0


def cmd_color(args: argparse.Namespace) -> int:
    try:
        g = _load_graph(args.input)
    except (OSError, GraphFormatError, HalinGraphError) as e:
        return _fail(str(e), 2)
    try:
        run = run_pipeline(g)
    except MaxDegreeExceededError as e:
        return _fail(str(e), 1)
    if args.trace:
        for line in trace_lines(run):
            print(line, file=sys.stderr)
    _write_text(args.output, coloring_to_text(run.coloring))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        g = _load_graph(args.input)
        coloring = coloring_from_text(_read_text(args.coloring))
        classes = _parse_class_spec(args.classes)
    except (OSError, GraphFormatError, HalinGraphError, ColoringFormatError, ValueError) as e:
        return _fail(str(e), 2)
    try:
        report = verify_packing(g, coloring, classes)
    except (PartialColoringError, UnmappedColorError) as e:
        return _fail(str(e), 2)
    if report.ok:
        print("OK")
        return 0
    for violation in report.violations:
        print(f"VIOLATION {violation.label} {violation.u} {violation.v} {violation.distance}")
    return 1


def cmd_oracle(args: argparse.Namespace) -> int:
    try:
        g = _load_graph(args.input)
        sequence = PackingSequence.from_text(args.sequence)
    except (OSError, GraphFormatError, HalinGraphError, ValueError) as e:
        return _fail(str(e), 2)
    try:
        result = s_packing_colorable(g, sequence, max_vertices=args.max_vertices)
    except OracleTooLargeError as e:
        return _fail(str(e), 2)
    if result.feasible:
        print("FEASIBLE")
        if args.witness:
            assert result.witness is not None
            labels = {v: f"c{c}" for v, c in result.witness.items()}
            _write_text(args.witness, coloring_to_text(labels))
        return 0
    print("INFEASIBLE")
    return 1


def cmd_bench(args: argparse.Namespace) -> int:
    try:
        sizes = [int(t) for t in args.sizes.split(",") if t.strip()]
        backend = None if args.impl == "auto" else _kernels.get_backend(args.impl)
        records = run_scaling(sizes, repeats=args.repeats, seed=args.seed, backend=backend)
    except (ValueError, RuntimeError) as e:
        return _fail(str(e), 2)
    _write_text(args.output, emit_csv(records))
    if len(records) >= 3:
        ratios = " ".join(f"{r:.2f}" for r in doubling_ratios(records))
        print(
            f"backend={args.impl} r2={linear_fit_r2(records):.4f} ratios=[{ratios}]",
            file=sys.stderr,
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="halinpack",
        description="Construct and check (1,1,2,2,2)-packing colorings of Halin graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="emit a Halin graph in the text format")
    p.add_argument("--leaves", type=int, default=10, help="cycle size (approximate for random)")
    p.add_argument("--max-degree", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument(
        "--family",
        choices=["random", "wheel", "cubic_caterpillar"],
        default="random",
    )
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("color", help="compute the packing coloring of a graph file")
    p.add_argument("-i", "--input", default="-")
    p.add_argument("-o", "--output", default="-")
    p.add_argument("--trace", action="store_true", help="stage trace on standard error")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", help="check a coloring against class radii")
    p.add_argument("-i", "--input", default="-")
    p.add_argument("-c", "--coloring", required=True)
    p.add_argument("--classes", default=DEFAULT_CLASS_SPEC, help="name:radius, comma-separated")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="exact feasibility of a packing sequence")
    p.add_argument("-i", "--input", default="-")
    p.add_argument("--sequence", default="1,1,2,2,2", help="comma-separated radii")
    p.add_argument("--witness", default=None, help="write a feasible assignment here")
    p.add_argument("--max-vertices", type=int, default=24)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("bench", help="scaling benchmark, CSV output")
    p.add_argument("--sizes", default=DEFAULT_BENCH_SIZES)
    p.add_argument("--repeats", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--impl", choices=["auto", "pure", "native"], default="auto")
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else 2
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
