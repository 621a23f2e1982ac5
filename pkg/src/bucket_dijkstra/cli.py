"""Command line: ``gen``, ``run``, ``bench`` and ``sweep``.

Exit codes: 0 on success, 1 on runtime errors, 2 on usage or parse errors.
"""
from __future__ import annotations

import argparse
import logging
import sys
import warnings

import numpy as np

from .bench import (DEFAULT_QUEUES, FOOTER, BenchSpec, GraphSpec, format_table, run_bench,
                    run_sweep, write_bench_csv, write_sweep_csv)
from .dimacs import read_dimacs_gr, save_dimacs_gr
from .errors import CapacityError, DimacsParseError, GraphError, KeyDomainError
from .graph import PrecisionWarning
from .keys import KeyCodec
from .sssp import QueueKind, bellman_ford, dijkstra, verify_result

log = logging.getLogger("bucket_dijkstra")

VERIFY_LIMIT = 10**4


class UsageError(Exception):
    pass


def _number_list(cast):
    def parse(text):
        try:
            return [cast(float(x)) if cast is int else cast(x) for x in text.split(",") if x]
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad number list {text!r}") from None
    return parse


def _add_graph_args(p, lists=False):
    num_int = _number_list(int) if lists else (lambda s: int(float(s)))
    num_float = _number_list(float) if lists else float
    p.add_argument("--n", type=num_int, help="vertex count")
    p.add_argument("--density", type=num_float, help="undirected edges per vertex (er)")
    p.add_argument("--m", type=num_int, help="edges per new vertex (ba)")
    p.add_argument("--wmin", type=int, default=1)
    p.add_argument("--wmax", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)


def _add_run_args(p):
    p.add_argument("--keys", default="int", type=KeyCodec.parse,
                   help="int | f32 | quant:<mantissa_bits>:<exponent_bits>")


def _queue_list(text):
    try:
        return tuple(QueueKind.parse(q) for q in text.split(",") if q)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser():
    parser = argparse.ArgumentParser(prog="bucket-dijkstra", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a generated graph as .gr")
    p.add_argument("model", choices=("er", "ba"))
    _add_graph_args(p)
    p.add_argument("--out", required=True)

    p = sub.add_parser("run", help="one SSSP run with statistics")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph", help=".gr file")
    src.add_argument("--gen", choices=("er", "ba"), help="generate the graph instead")
    _add_graph_args(p)
    p.add_argument("--source", type=int, default=0)
    p.add_argument("--queue", type=QueueKind.parse, default=QueueKind("bucket"),
                   help="bucket | chunked[:log2] | heap:d")
    _add_run_args(p)
    p.add_argument("--verify", action="store_true",
                   help="check the result and cross-check with Bellman-Ford")
    p.add_argument("--dist-out", help="write one distance per line")

    for name, lists in (("bench", False), ("sweep", True)):
        p = sub.add_parser(name, help="timed trials across queue kinds" if name == "bench"
                           else "bench over a grid of n / density / m")
        src = p.add_mutually_exclusive_group(required=True)
        if name == "bench":
            src.add_argument("--graph", help=".gr file")
        src.add_argument("--gen", choices=("er", "ba"))
        _add_graph_args(p, lists)
        p.add_argument("--queue", type=_queue_list, default=DEFAULT_QUEUES,
                       help="comma-separated queue kinds")
        _add_run_args(p)
        p.add_argument("--trials", type=int, default=20)
        p.add_argument("--source", type=int, help="fixed source vertex")
        p.add_argument("--sources", type=int, help="number of random sources to cycle")
        p.add_argument("--warmup", type=int, default=1)
        p.add_argument("--jobs", type=int, default=1,
                       help="parallel trials; disables the timing columns")
        p.add_argument("--csv", help="CSV output path")
    return parser


def _graph_spec(args, model, path=None):
    if model == "file":
        return GraphSpec("file", path=path)
    first = (lambda x: x[0] if isinstance(x, list) else x)
    try:
        return GraphSpec(model, n=first(args.n), density=first(args.density), m=first(args.m),
                         wmin=args.wmin, wmax=args.wmax, seed=args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_gen(args):
    spec = _graph_spec(args, args.model)
    g = spec.build()
    note = f"{args.model} n={spec.n} " + (f"density={spec.density}" if args.model == "er" else f"m={spec.m}") \
        + f" w=[{spec.wmin},{spec.wmax}] seed={spec.seed}"
    save_dimacs_gr(g, args.out, comments=[note])
    print(f"wrote {args.out}: {g.vertex_count} vertices, {g.arc_count} arcs")
    return 0


def _load(args):
    if args.graph:
        return read_dimacs_gr(args.graph)
    return _graph_spec(args, args.gen).build()


def cmd_run(args):
    g = _load(args)
    if not 0 <= args.source < g.vertex_count:
        raise UsageError(f"source {args.source} out of range 0..{g.vertex_count - 1}")
    res = dijkstra(g, args.source, args.keys, args.queue)
    s = res.stats
    reached = int((res.dist >= 0).sum())
    print(f"vertices {g.vertex_count} arcs {g.arc_count} source {args.source} "
          f"queue {args.queue} keys {args.keys}")
    print(f"reached {reached} U {s.U} U_value {res.codec.value_of(s.U)}")
    print(f"pops {s.pops} inserts {s.inserts} decrease_keys {s.decrease_keys} "
          f"relaxations {s.relaxations} cells_scanned {s.cells_scanned} expansions {s.expansions}")
    print(f"time {s.wall_time:.6f}")
    status = 0
    if args.verify:
        report = verify_result(g, res)
        print(f"verify {'ok' if report else 'FAILED'}" + ("" if report else f" [{report.check}] {report.detail}"))
        if g.vertex_count <= VERIFY_LIMIT:
            same = np.array_equal(bellman_ford(g, args.source, args.keys), res.dist)
            print(f"bellman_ford {'agrees' if same else 'DISAGREES'}")
            status = 0 if (report and same) else 1
        else:
            print(f"bellman_ford skipped (n > {VERIFY_LIMIT})")
            status = 0 if report else 1
    if args.dist_out:
        with open(args.dist_out, "w", newline="\n") as fh:
            for d in res.distances():
                if np.isinf(d):
                    fh.write("inf\n")
                elif res.codec.is_float:
                    fh.write(f"{float(d)!r}\n")
                else:
                    fh.write(f"{int(d)}\n")
    return status


def _bench_spec(args, gspec):
    try:
        return BenchSpec(graph=gspec, queues=tuple(args.queue), codec=args.keys, trials=args.trials,
                         source=args.source, sources=args.sources, source_seed=args.seed,
                         warmup=args.warmup, jobs=args.jobs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_bench(args):
    gspec = _graph_spec(args, "file" if args.graph else args.gen, args.graph)
    spec = _bench_spec(args, gspec)
    report = run_bench(spec)
    print(format_table(report.rows))
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            write_bench_csv(report.rows, fh)
    if report.interrupted:
        print("interrupted: partial results", file=sys.stderr)
        return 1
    return 0


def cmd_sweep(args):
    lists = {"ns": args.n, "densities": args.density, "ms": args.m}
    for name, values in lists.items():
        if values is not None and len(values) == 0:
            raise UsageError(f"empty {name} grid")
    gspec = _graph_spec(args, args.gen)
    spec = _bench_spec(args, gspec)
    try:
        reports = run_sweep(spec, **lists)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    for rep in reports:
        print(format_table(rep.rows).rsplit("\n", 1)[0])
    print(FOOTER)
    text = write_sweep_csv(reports, spec.queues)
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            fh.write(text)
    else:
        print(text, end="")
    return 0


COMMANDS = {"gen": cmd_gen, "run": cmd_run, "bench": cmd_bench, "sweep": cmd_sweep}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", PrecisionWarning)
        try:
            code = COMMANDS[args.command](args)
        except UsageError as exc:
            parser.print_usage(sys.stderr)
            print(f"error: {exc}", file=sys.stderr)
            code = 2
        except DimacsParseError as exc:
            print(f"error: {exc}", file=sys.stderr)
            code = 2
        except (GraphError, KeyDomainError, CapacityError, OSError, ValueError, RuntimeError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            code = 1
    if any(issubclass(w.category, PrecisionWarning) for w in caught):
        log.warning("float weights were narrowed to float32")
    return code


if __name__ == "__main__":
    sys.exit(main())
