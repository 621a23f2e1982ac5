"""Dijkstra over pluggable queues, plus a Bellman-Ford oracle and a checker."""
from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np
from numba import njit

from .bucket_queue import BucketQueue
from .chunked_queue import ChunkedBucketQueue, default_chunk_size
from .errors import GraphError, KeyOverflowError
from .graph import FLOAT, Graph
from .heap import DaryHeap
from .keys import KeyCodec, add_key_jit

UNREACHABLE = -1
HEAP_ARITIES = (2, 4, 8, 16)


@dataclass(frozen=True)
class QueueKind:
    """Which queue a run uses: ``bucket``, ``chunked`` or ``heap``.

    ``param`` is the log2 chunk size for ``chunked`` (None picks the square
    root of the key space) and the arity for ``heap``.
    """

    name: str = "bucket"
    param: int | None = None

    def __post_init__(self):
        if self.name not in ("bucket", "chunked", "heap"):
            raise ValueError(f"unknown queue kind {self.name!r}")
        if self.name == "heap":
            if self.param is None:
                object.__setattr__(self, "param", 4)
            if self.param < 2:
                raise ValueError("heap arity must be at least 2")
        if self.name == "bucket" and self.param is not None:
            raise ValueError("bucket queue takes no parameter")
        if self.name == "chunked" and self.param is not None and not 0 <= self.param <= 32:
            raise ValueError("chunk size log2 must be in 0..32")

    @classmethod
    def parse(cls, text: str) -> "QueueKind":
        """``bucket``, ``chunked``, ``chunked:<log2>`` or ``heap:<d>``."""
        name, _, arg = text.partition(":")
        try:
            param = int(arg) if arg else None
        except ValueError:
            raise ValueError(f"bad queue kind {text!r}") from None
        return cls(name, param)

    def __str__(self):
        return self.name if self.param is None else f"{self.name}:{self.param}"

    def chunk_size(self, key_space: int) -> int:
        if self.param is None:
            return default_chunk_size(key_space)
        return 1 << self.param

    def build(self, key_space: int, capacity: int, stop_on_empty: bool = True):
        """Fresh queue for ``capacity`` vertices over ``key_space`` keys."""
        if self.name == "bucket":
            return BucketQueue(key_space, capacity, stop_on_empty)
        if self.name == "chunked":
            return ChunkedBucketQueue(key_space, self.chunk_size(key_space), capacity, stop_on_empty)
        return DaryHeap(self.param, capacity)


def as_queue_kind(q) -> QueueKind:
    return q if isinstance(q, QueueKind) else QueueKind.parse(q)


def as_codec(c) -> KeyCodec:
    if c is None:
        return KeyCodec()
    return c if isinstance(c, KeyCodec) else KeyCodec.parse(c)


@dataclass
class RunStats:
    pops: int = 0
    inserts: int = 0
    decrease_keys: int = 0
    relaxations: int = 0
    cells_scanned: int = 0
    expansions: int = 0
    U: int = 0
    wall_time: float = 0.0

    def work(self) -> int:
        """Queue work counter: inserts + decrease-keys + cells scanned."""
        return self.inserts + self.decrease_keys + self.cells_scanned


@dataclass
class SsspResult:
    """Distances as keys (``UNREACHABLE`` for unreached vertices) and pop log.

    ``pop_order`` has one ``(vertex, key)`` row per pop.
    """

    source: int
    dist: np.ndarray
    pop_order: np.ndarray
    codec: KeyCodec
    queue: QueueKind
    stats: RunStats = field(default_factory=RunStats)

    def distances(self) -> np.ndarray:
        """Distances in weight units; unreachable vertices are ``inf``."""
        out = np.full(len(self.dist), np.inf)
        reached = self.dist != UNREACHABLE
        out[reached] = self.codec.values(self.dist[reached])
        return out


@njit(nogil=True)
def _dijkstra_kernel(q, offsets, targets, weights, source, mode, mb, eb, max_key,
                     dist, pop_v, pop_k):
    ubuf = np.zeros(1, np.uint32)
    fbuf = ubuf.view(np.float32)
    dist[source] = 0
    q.insert(source, 0)
    pops = 0
    relaxations = 0
    while True:
        v, k = q.pop_min()
        if v < 0:
            break
        pop_v[pops] = v
        pop_k[pops] = k
        pops += 1
        for a in range(offsets[v], offsets[v + 1]):
            relaxations += 1
            t = targets[a]
            nd = add_key_jit(mode, mb, eb, max_key, k, weights[a], ubuf, fbuf)
            old = dist[t]
            if old == -1:
                dist[t] = nd
                q.insert(t, nd)
            # a settled vertex has dist <= k <= nd, so it never passes this test
            elif nd < old:
                dist[t] = nd
                q.decrease_key(t, nd)
    return pops, relaxations


def prepare_graph(graph: Graph, codec: KeyCodec) -> Graph:
    """Graph with weights in the representation ``codec`` expects."""
    if codec.is_float:
        return graph.with_weight_mode(FLOAT)
    if graph.weight_mode == FLOAT:
        raise GraphError("integer keys need an integer-weight graph")
    return graph


def dijkstra(graph: Graph, source: int, codec=None, queue="bucket",
             stop_on_empty: bool = True) -> SsspResult:
    """Single-source shortest distances from ``source``.

    Vertices enter the queue when first reached, are decreased on strict
    improvement, and arcs into settled vertices are skipped. ``wall_time``
    covers queue construction and the search, not graph preparation.
    """
    codec = as_codec(codec)
    kind = as_queue_kind(queue)
    n = graph.vertex_count
    if not 0 <= source < n:
        raise ValueError(f"source {source} out of range 0..{n - 1}")
    g = prepare_graph(graph, codec)
    dist = np.full(n, UNREACHABLE, dtype=np.int64)
    pop_v = np.empty(n, dtype=np.int64)
    pop_k = np.empty(n, dtype=np.int64)
    t0 = time.perf_counter()
    q = kind.build(codec.key_space, n, stop_on_empty)
    pops, relaxations = _dijkstra_kernel(
        q, g.offsets, g.targets, g.weights, source, codec.mode_id,
        codec.mantissa_bits, codec.exponent_bits, codec.max_key, dist, pop_v, pop_k)
    elapsed = time.perf_counter() - t0
    stats = RunStats(
        pops=pops,
        inserts=q.inserts,
        decrease_keys=q.decreases,
        relaxations=relaxations,
        cells_scanned=getattr(q, "cells_scanned", 0),
        expansions=getattr(q, "expansions", 0),
        U=int(dist.max()) if n else 0,
        wall_time=elapsed,
    )
    pop_order = np.column_stack([pop_v[:pops], pop_k[:pops]])
    return SsspResult(source, dist, pop_order, codec, kind, stats)


def dijkstra_heap(graph: Graph, source: int, codec=None, arity: int = 4) -> SsspResult:
    return dijkstra(graph, source, codec, QueueKind("heap", arity))


def bellman_ford(graph: Graph, source: int, codec=None) -> np.ndarray:
    """Shortest distance keys by repeated full-arc relaxation, no queue.

    Arithmetic runs in the codec's value domain through the vectorized codec
    path, so the result is comparable key-for-key with :func:`dijkstra`.
    """
    codec = as_codec(codec)
    g = prepare_graph(graph, codec)
    n = g.vertex_count
    if not 0 <= source < n:
        raise ValueError(f"source {source} out of range 0..{n - 1}")
    src = g.sources()
    tgt = g.targets
    w = g.weights
    dist = np.full(n, UNREACHABLE, dtype=np.int64)
    dist[source] = 0
    for _ in range(max(n - 1, 0)):
        live = dist[src] != UNREACHABLE
        if not live.any():
            break
        cand = codec.add_keys(dist[src[live]], w[live])
        heads = tgt[live]
        new = dist.copy()
        # UNREACHABLE is -1, so lift it above every key before taking minima
        new[new == UNREACHABLE] = np.iinfo(np.int64).max
        np.minimum.at(new, heads, cand)
        new[new == np.iinfo(np.int64).max] = UNREACHABLE
        if np.array_equal(new, dist):
            break
        dist = new
    return dist


@dataclass
class VerifyReport:
    ok: bool
    check: str | None = None
    detail: str | None = None

    def __bool__(self):
        return self.ok


def verify_result(graph: Graph, result: SsspResult) -> VerifyReport:
    """Check pop monotonicity, arc slackness and the source distance."""
    codec = result.codec
    keys = result.pop_order[:, 1] if len(result.pop_order) else np.zeros(0, np.int64)
    drops = np.flatnonzero(np.diff(keys) < 0)
    if len(drops):
        i = int(drops[0])
        return VerifyReport(False, "monotone", f"pop {i + 1} has key {keys[i + 1]} after {keys[i]}")
    g = prepare_graph(graph, codec)
    dist = result.dist
    src = g.sources()
    live = np.flatnonzero(dist[src] != UNREACHABLE)
    if len(live):
        try:
            bound = codec.add_keys(dist[src[live]], g.weights[live])
        except KeyOverflowError:
            return VerifyReport(False, "slackness", "relaxing an arc overflows the key space")
        head = dist[g.targets[live]]
        bad = np.flatnonzero((head == UNREACHABLE) | (head > bound))
        if len(bad):
            a = int(live[bad[0]])
            u, v = int(src[a]), int(g.targets[a])
            return VerifyReport(False, "slackness",
                                f"arc ({u}, {v}, {g.weights[a]}): dist[{v}]={dist[v]} > {int(bound[bad[0]])}")
    if dist[result.source] != 0:
        return VerifyReport(False, "source", f"dist[source]={dist[result.source]}")
    return VerifyReport(True)
