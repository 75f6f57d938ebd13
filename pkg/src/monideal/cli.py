"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or format error,
3 oracle budget exceeded.
"""

import argparse
import json
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from .bench import run_sweep, write_csv
from .core import INF
from .counting import OpCounter
from .files import FormatError, emit_components, emit_ideal, parse_components, parse_ideal
from .incremental import decompose_incremental
from .oracle import BudgetError, DEFAULT_BUDGET, components_generate, decompose_oracle
from .randgen import gen_random
from .recursive import decompose_recursive

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _jsonable(x):
    if isinstance(x, float):
        if x == INF:
            return "inf"
        if x == -INF:
            return "-inf"
    if isinstance(x, list):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    return x


def _decompose_one(g, args):
    counter = OpCounter() if args.stats else None
    trace = [] if args.trace else None
    start = time.perf_counter()
    if args.algo == "recursive":
        comps = decompose_recursive(g, counter=counter)
    elif args.algo == "incremental":
        sizes = [] if args.stats else None
        comps = decompose_incremental(g, order=args.insertion_order,
                                      counter=counter, trace=trace, t_sizes=sizes)
    else:
        comps = decompose_oracle(g, budget=args.budget)
        sizes = None
    wall = time.perf_counter() - start
    if trace:
        for record in trace:
            print(json.dumps(_jsonable(record)), file=sys.stderr)
    if args.stats:
        parts = [f"algo={args.algo}", f"n={g.n}", f"p={g.p}", f"l={len(comps)}"]
        if counter is not None:
            parts.append(f"ops={counter.ops}")
        parts.append(f"wall={wall:.6f}s")
        if args.algo == "incremental" and sizes:
            parts.append(f"peak_t={max(sizes)}")
        print("stats: " + " ".join(parts), file=sys.stderr)
    return emit_components(comps)


def _cmd_decompose(args):
    src = Path(args.input)
    if src.is_dir():
        if args.output is None:
            print("error: directory input needs an output directory", file=sys.stderr)
            return EXIT_USAGE
        dst = Path(args.output)
        dst.mkdir(parents=True, exist_ok=True)
        inputs = sorted(src.glob("*.ideal"))
        ideals = [(path, parse_ideal(path.read_text())) for path in inputs]
        with ThreadPoolExecutor() as pool:
            outputs = list(pool.map(lambda item: _decompose_one(item[1], args), ideals))
        for path, text in zip(inputs, outputs):
            (dst / (path.stem + ".components")).write_text(text)
        return EXIT_OK
    g = parse_ideal(src.read_text())
    text = _decompose_one(g, args)
    if args.output is None:
        sys.stdout.write(text)
    else:
        Path(args.output).write_text(text)
    return EXIT_OK


def _cmd_verify(args):
    comps = parse_components(Path(args.components).read_text())
    g = parse_ideal(Path(args.ideal).read_text())
    try:
        comps.validate()
    except ValueError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    if not components_generate(comps, g, budget=args.budget):
        print("verification failed: components do not intersect to the ideal",
              file=sys.stderr)
        return EXIT_VERIFY
    print("ok: components are an irredundant decomposition of the ideal")
    return EXIT_OK


def _cmd_gen(args):
    g = gen_random(args.vars, args.gens, args.maxdeg, args.seed, generic=args.generic)
    Path(args.output).write_text(emit_ideal(g))
    print(f"wrote {g.p} generators in {g.n} variables to {args.output}")
    return EXIT_OK


def _cmd_bench(args):
    records = run_sweep(args.suite)
    write_csv(records, args.out)
    print(f"wrote {len(records)} records to {args.out}")
    return EXIT_OK


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="monideal",
        description="Irreducible decomposition of monomial ideals.")
    sub = parser.add_subparsers(dest="command", required=True)

    d = sub.add_parser("decompose", help="decompose an ideal file (or directory of them)")
    d.add_argument("--algo", choices=["recursive", "incremental", "oracle"],
                   default="incremental")
    d.add_argument("--trace", action="store_true",
                   help="emit one JSON record per incremental step on stderr")
    d.add_argument("--stats", action="store_true",
                   help="print operation counts and timing on stderr")
    d.add_argument("--insertion-order", choices=["lex", "input"], default="lex",
                   help="incremental absorption order; 'input' voids the "
                        "guarantee that the component count never shrinks")
    d.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="oracle cell budget")
    d.add_argument("input")
    d.add_argument("output", nargs="?")
    d.set_defaults(func=_cmd_decompose)

    v = sub.add_parser("verify", help="check a component file against an ideal file")
    v.add_argument("components")
    v.add_argument("ideal")
    v.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    v.set_defaults(func=_cmd_verify)

    r = sub.add_parser("gen", help="write a seeded random ideal file")
    r.add_argument("--vars", type=int, required=True)
    r.add_argument("--gens", type=int, required=True)
    r.add_argument("--maxdeg", type=int, required=True)
    r.add_argument("--seed", type=int, required=True)
    r.add_argument("--generic", action="store_true")
    r.add_argument("output")
    r.set_defaults(func=_cmd_gen)

    b = sub.add_parser("bench", help="run an operation-count sweep to CSV")
    b.add_argument("--suite", choices=["generic-sweep", "nongeneric-sweep"],
                   required=True)
    b.add_argument("--out", required=True)
    b.set_defaults(func=_cmd_bench)
    return parser


def cli_main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.command == "decompose" and args.trace and args.algo != "incremental":
        print("error: --trace is only meaningful with --algo incremental",
              file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(cli_main())
