"""Repeated-trial timing of Dijkstra across queue kinds.

Graphs are generated or loaded once per configuration, outside the timed
region. Each trial picks a source and runs every queue kind on it back to
back, so slow drift in machine speed affects all kinds alike. The timed region
is one :func:`dijkstra` call: queue allocation plus the search.

The reference time for the speedup column is the best mean over the heap
kinds in the comparison (or the first kind when no heap is present).
"""
from __future__ import annotations

import csv
import io
import math
import statistics
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace

import numpy as np

from .dimacs import read_dimacs_gr
from .graph import Graph, barabasi_albert, erdos_renyi
from .keys import KeyCodec
from .sssp import HEAP_ARITIES, QueueKind, dijkstra, prepare_graph

DEFAULT_QUEUES = (QueueKind("bucket"),) + tuple(QueueKind("heap", d) for d in HEAP_ARITIES)

BENCH_COLUMNS = (
    "model", "vertices", "arcs", "density", "m", "queue", "keys", "trials",
    "mean_s", "min_s", "max_s", "speedup", "u_mean", "pops_mean", "inserts_mean",
    "decrease_keys_mean", "relaxations_mean", "cells_scanned_mean",
)
TIMING_COLUMNS = ("mean_s", "min_s", "max_s", "speedup")

FOOTER = ("times cover queue allocation plus the search; graph generation and "
          "loading are excluded; speedup is relative to the best heap mean")


@dataclass(frozen=True)
class GraphSpec:
    """How to obtain the graph for one benchmark point."""

    model: str
    n: int | None = None
    density: float | None = None
    m: int | None = None
    wmin: int = 1
    wmax: int = 1000
    seed: int = 0
    path: str | None = None

    def __post_init__(self):
        if self.model == "er":
            if self.n is None or self.density is None:
                raise ValueError("er graphs need n and density")
            object.__setattr__(self, "density", float(self.density))
        elif self.model == "ba":
            if self.n is None or self.m is None:
                raise ValueError("ba graphs need n and m")
        elif self.model == "file":
            if self.path is None:
                raise ValueError("file graphs need a path")
        else:
            raise ValueError(f"unknown graph model {self.model!r}")

    def build(self) -> Graph:
        if self.model == "er":
            return erdos_renyi(self.n, self.density, (self.wmin, self.wmax), self.seed)
        if self.model == "ba":
            return barabasi_albert(self.n, self.m, (self.wmin, self.wmax), self.seed)
        return read_dimacs_gr(self.path)


@dataclass(frozen=True)
class BenchSpec:
    """One benchmark point.

    With ``source`` set every trial uses that vertex. Otherwise sources are
    drawn uniformly from ``source_seed``: ``sources`` distinct draws cycled
    over the trials, or a fresh draw per trial when ``sources`` is None.
    """

    graph: GraphSpec
    queues: tuple = DEFAULT_QUEUES
    codec: KeyCodec = field(default_factory=KeyCodec)
    trials: int = 20
    source: int | None = None
    sources: int | None = None
    source_seed: int = 0
    warmup: int = 1
    jobs: int = 1

    def __post_init__(self):
        if not self.queues:
            raise ValueError("at least one queue kind is required")
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if self.sources is not None and self.sources < 1:
            raise ValueError("sources must be at least 1")
        if self.warmup < 0:
            raise ValueError("warmup must be non-negative")


@dataclass
class BenchRow:
    model: str
    vertices: int
    arcs: int
    density: float | None
    m: int | None
    queue: str
    keys: str
    trials: int
    mean_s: float | None
    min_s: float | None
    max_s: float | None
    speedup: float | None
    u_mean: float
    pops_mean: float
    inserts_mean: float
    decrease_keys_mean: float
    relaxations_mean: float
    cells_scanned_mean: float

    def as_dict(self):
        return {c: getattr(self, c) for c in BENCH_COLUMNS}


@dataclass
class BenchReport:
    rows: list
    times: dict
    interrupted: bool = False


def pick_sources(n: int, spec: BenchSpec) -> list:
    if spec.source is not None:
        if not 0 <= spec.source < n:
            raise ValueError(f"source {spec.source} out of range 0..{n - 1}")
        return [spec.source] * spec.trials
    rng = np.random.default_rng(spec.source_seed)
    if spec.sources is None:
        return rng.integers(0, n, size=spec.trials).tolist()
    pool = rng.integers(0, n, size=spec.sources).tolist()
    return [pool[i % len(pool)] for i in range(spec.trials)]


def _trial(graph, source, spec):
    return [dijkstra(graph, source, spec.codec, kind) for kind in spec.queues]


def _mean(xs):
    return statistics.fmean(xs) if xs else math.nan


def run_bench(spec: BenchSpec, graph: Graph | None = None) -> BenchReport:
    """Time every queue kind in ``spec`` on one graph.

    ``KeyboardInterrupt`` stops the loop; rows are then built from the trials
    completed so far and the report is flagged ``interrupted``.
    """
    if graph is None:
        graph = spec.graph.build()
    g = prepare_graph(graph, spec.codec)
    sources = pick_sources(g.vertex_count, spec)
    for _ in range(spec.warmup):
        _trial(g, sources[0], spec)

    results = []   # one list of SsspResult per finished trial
    interrupted = False
    try:
        if spec.jobs > 1:
            with ThreadPoolExecutor(spec.jobs) as pool:
                results = list(pool.map(lambda s: _trial(g, s, spec), sources))
        else:
            for s in sources:
                results.append(_trial(g, s, spec))
    except KeyboardInterrupt:
        interrupted = True

    timed = spec.jobs <= 1
    times = {str(k): [r[i].stats.wall_time for r in results] for i, k in enumerate(spec.queues)}
    means = {k: _mean(v) for k, v in times.items()}
    heap_means = [means[str(k)] for k in spec.queues if k.name == "heap"]
    reference = min(heap_means) if heap_means else means[str(spec.queues[0])]

    rows = []
    gs = spec.graph
    for i, kind in enumerate(spec.queues):
        stats = [r[i].stats for r in results]
        mean = means[str(kind)]
        have = timed and bool(stats)
        rows.append(BenchRow(
            model=gs.model,
            vertices=g.vertex_count,
            arcs=g.arc_count,
            density=gs.density,
            m=gs.m,
            queue=str(kind),
            keys=str(spec.codec),
            trials=len(stats),
            mean_s=mean if have else None,
            min_s=min(times[str(kind)]) if have else None,
            max_s=max(times[str(kind)]) if have else None,
            speedup=reference / mean if have else None,
            u_mean=_mean([s.U for s in stats]),
            pops_mean=_mean([s.pops for s in stats]),
            inserts_mean=_mean([s.inserts for s in stats]),
            decrease_keys_mean=_mean([s.decrease_keys for s in stats]),
            relaxations_mean=_mean([s.relaxations for s in stats]),
            cells_scanned_mean=_mean([s.cells_scanned for s in stats]),
        ))
    return BenchReport(rows, times if timed else {}, interrupted)


def run_sweep(spec: BenchSpec, ns=None, densities=None, ms=None) -> list:
    """Run :func:`run_bench` over the grid of the given parameter values.

    Unset axes keep the value in ``spec.graph``. Returns one report per point.
    """
    gs = spec.graph
    ns = list(ns) if ns is not None else [gs.n]
    if gs.model == "er":
        other = list(densities) if densities is not None else [gs.density]
        key = "density"
    elif gs.model == "ba":
        other = list(ms) if ms is not None else [gs.m]
        key = "m"
    else:
        raise ValueError("sweeps need a generated graph model")
    if not ns or not other:
        raise ValueError("sweep grid is empty")
    reports = []
    for value in other:
        for n in ns:
            point = replace(spec, graph=replace(gs, n=int(n), **{key: value}))
            reports.append(run_bench(point))
    return reports


def _fmt(value):
    if value is None:
        return ""
    if isinstance(value, float):
        if math.isnan(value):
            return ""
        return f"{value:.6f}"
    return str(value)


def write_bench_csv(rows, stream=None):
    out = io.StringIO() if stream is None else stream
    w = csv.writer(out, lineterminator="\n")
    w.writerow(BENCH_COLUMNS)
    for row in rows:
        d = row.as_dict()
        w.writerow([_fmt(d[c]) for c in BENCH_COLUMNS])
    return out.getvalue() if stream is None else None


def sweep_columns(queues) -> tuple:
    return ("model", "n", "density", "m") + tuple(str(q) for q in queues)


def write_sweep_csv(reports, queues, stream=None):
    """One line per grid point, one mean-time column per queue kind."""
    out = io.StringIO() if stream is None else stream
    w = csv.writer(out, lineterminator="\n")
    w.writerow(sweep_columns(queues))
    for rep in reports:
        first = rep.rows[0]
        by_queue = {r.queue: r.mean_s for r in rep.rows}
        w.writerow([first.model, first.vertices, _fmt(first.density), _fmt(first.m)]
                   + [_fmt(by_queue[str(q)]) for q in queues])
    return out.getvalue() if stream is None else None


def format_table(rows) -> str:
    """Plain-text table with the columns of a vertices/density/time/speedup report."""
    head = f"{'Vertices':>11} {'Density':>7} {'m':>3} {'Queue':>10} {'Mean [s]':>10} " \
           f"{'Min [s]':>10} {'Max [s]':>10} {'Speedup':>8} {'U mean':>12}"
    lines = [head, "-" * len(head)]
    for r in rows:
        density = "" if r.density is None else f"{r.density:g}"
        m = "" if r.m is None else str(r.m)

        def t(x):
            return "" if x is None else f"{x:.6f}"
        speed = "" if r.speedup is None else f"{r.speedup:.2f}"
        lines.append(f"{r.vertices:>11,} {density:>7} {m:>3} {r.queue:>10} {t(r.mean_s):>10} "
                     f"{t(r.min_s):>10} {t(r.max_s):>10} {speed:>8} {r.u_mean:>12.1f}")
    lines.append(FOOTER)
    return "\n".join(lines)
