"""Immutable forward-star (CSR) graphs and the random graph generators."""
from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
from numba import njit

from .errors import CapacityError, GraphError

INTEGER = "integer"
FLOAT = "float"

# targets are int32, so no vertex id or arc index may pass this
MAX_INDEX = 2**31 - 1


class PrecisionWarning(UserWarning):
    """Float weights were narrowed to float32 and changed value."""


@dataclass(frozen=True, eq=False)
class Graph:
    """Weighted directed graph in forward-star layout.

    The arcs leaving ``v`` are ``targets[offsets[v]:offsets[v + 1]]`` with the
    matching slice of ``weights``. Integer graphs store int64 weights, float
    graphs store float32 weights.
    """

    offsets: np.ndarray
    targets: np.ndarray
    weights: np.ndarray
    weight_mode: str = INTEGER

    def __post_init__(self):
        for arr in (self.offsets, self.targets, self.weights):
            arr.setflags(write=False)

    @property
    def vertex_count(self) -> int:
        return len(self.offsets) - 1

    @property
    def arc_count(self) -> int:
        return len(self.targets)

    def out_arcs(self, v: int):
        lo, hi = self.offsets[v], self.offsets[v + 1]
        return self.targets[lo:hi], self.weights[lo:hi]

    def sources(self) -> np.ndarray:
        """Source vertex of every arc, aligned with ``targets``."""
        return np.repeat(np.arange(self.vertex_count, dtype=np.int32), np.diff(self.offsets))

    def arcs(self):
        """Iterate ``(source, target, weight)`` triples in storage order."""
        w = self.weights.tolist()
        for s, t, x in zip(self.sources().tolist(), self.targets.tolist(), w):
            yield s, t, x

    def arc_multiset(self):
        """Sorted list of arcs, for order-insensitive comparison."""
        return sorted(self.arcs())

    def with_weight_mode(self, mode: str) -> "Graph":
        """Same topology with weights converted to ``mode``."""
        if mode == self.weight_mode:
            return self
        if mode == FLOAT:
            return from_arrays(self.vertex_count, self.sources(), self.targets, self.weights, FLOAT)
        if not np.all(self.weights == np.floor(self.weights)):
            raise GraphError("float graph has non-integral weights")
        return from_arrays(self.vertex_count, self.sources(), self.targets, self.weights.astype(np.int64), INTEGER)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.weight_mode == other.weight_mode
            and np.array_equal(self.offsets, other.offsets)
            and np.array_equal(self.targets, other.targets)
            and np.array_equal(self.weights, other.weights)
        )

    def __repr__(self):
        return f"Graph(n={self.vertex_count}, arcs={self.arc_count}, weights={self.weight_mode})"


def _check_weights(w: np.ndarray, mode: str) -> np.ndarray:
    if mode == INTEGER:
        if w.dtype.kind == "f":
            if not np.isfinite(w).all():
                raise GraphError("weights must be finite")
            if (w != np.floor(w)).any():
                raise GraphError("integer graph needs integral weights")
        if (w < 0).any():
            raise GraphError("weights must be non-negative")
        return w.astype(np.int64)
    if mode != FLOAT:
        raise GraphError(f"unknown weight mode {mode!r}")
    w = w.astype(np.float64)
    if np.isnan(w).any():
        raise GraphError("weights must not be NaN")
    if np.isinf(w).any():
        raise GraphError("weights must be finite")
    if (w < 0).any():
        raise GraphError("weights must be non-negative")
    with np.errstate(over="ignore"):
        w32 = w.astype(np.float32)
    if np.isinf(w32).any():
        raise GraphError("weight exceeds float32 range")
    if (w32.astype(np.float64) != w).any():
        warnings.warn("float weights narrowed to float32", PrecisionWarning, stacklevel=3)
    # +0.0 folds negative zero onto zero
    return w32 + np.float32(0.0)


def from_arrays(n: int, sources, targets, weights, weight_mode: str = INTEGER) -> Graph:
    """Build a graph from parallel arc arrays; arc order per source is kept."""
    if n < 1:
        raise GraphError("a graph needs at least one vertex")
    if n > MAX_INDEX:
        raise CapacityError("too many vertices")
    src = np.asarray(sources, dtype=np.int64).ravel()
    dst = np.asarray(targets, dtype=np.int64).ravel()
    w = np.asarray(weights).ravel()
    if not (len(src) == len(dst) == len(w)):
        raise GraphError("arc arrays differ in length")
    if len(src) > MAX_INDEX:
        raise CapacityError("too many arcs")
    if len(src):
        if src.min() < 0 or src.max() >= n:
            raise GraphError("arc source out of range")
        if dst.min() < 0 or dst.max() >= n:
            raise GraphError("arc target out of range")
    if w.dtype == object:
        w = w.astype(np.float64)
    w = _check_weights(w, weight_mode)
    order = np.argsort(src, kind="stable")
    offsets = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=n), out=offsets[1:])
    return Graph(offsets, dst[order].astype(np.int32), w[order], weight_mode)


def build_graph(n: int, arcs, weight_mode: str = INTEGER) -> Graph:
    """Build a graph from a sequence of ``(source, target, weight)`` triples."""
    arcs = list(arcs)
    if arcs:
        src, dst, w = zip(*arcs)
    else:
        src, dst, w = (), (), ()
    dtype = np.float64 if weight_mode == FLOAT else None
    w = np.asarray(w, dtype=dtype) if w else np.zeros(0, dtype=np.int64)
    return from_arrays(n, np.asarray(src, dtype=np.int64), np.asarray(dst, dtype=np.int64), w, weight_mode)


def _draw_weights(rng, count, lo, hi, weight_mode, snap):
    if lo > hi:
        raise ValueError("weight range is empty")
    if weight_mode == INTEGER:
        return rng.integers(int(lo), int(hi), size=count, endpoint=True, dtype=np.int64)
    w = rng.uniform(lo, hi, size=count)
    if snap is not None:
        # stays inside [lo, hi] when both ends are multiples of snap
        w = np.clip(np.round(w / snap) * snap, lo, hi)
    # draw float32 values up front so storing them loses nothing
    return w.astype(np.float32)


def _undirected(n, u, v, w, weight_mode):
    # arcs u->v and v->u for every edge
    src = np.concatenate([u, v])
    dst = np.concatenate([v, u])
    return from_arrays(n, src, dst, np.concatenate([w, w]), weight_mode)


def erdos_renyi(n: int, density: float, weight_range=(1, 1000), seed=None,
                weight_mode: str = INTEGER, snap=None) -> Graph:
    """G(n, M) random graph with ``M = round(density * n)`` undirected edges.

    Endpoints are uniform, self-loops are redrawn, parallel edges are kept.
    Each edge becomes two opposite arcs with the same weight. ``snap`` rounds
    float weights to multiples of the given step.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if density < 0:
        raise ValueError("density must be non-negative")
    m = int(round(density * n))
    if 2 * m > MAX_INDEX:
        raise CapacityError(f"{m} edges exceed the representable arc count")
    if m and n == 1:
        raise ValueError("edges on a single vertex would all be self-loops")
    topo_seed, weight_seed = np.random.SeedSequence(seed).spawn(2)
    rng = np.random.default_rng(topo_seed)
    u = rng.integers(0, n, size=m, dtype=np.int64)
    v = rng.integers(0, n, size=m, dtype=np.int64)
    loops = np.flatnonzero(u == v)
    while len(loops):
        v[loops] = rng.integers(0, n, size=len(loops), dtype=np.int64)
        loops = loops[u[loops] == v[loops]]
    w = _draw_weights(np.random.default_rng(weight_seed), m, *weight_range, weight_mode, snap)
    return _undirected(n, u, v, w, weight_mode)


@njit(cache=True)
def _attach(rng, n, m):
    n_edges = m * (m + 1) // 2 + (n - m - 1) * m
    u = np.empty(n_edges, np.int64)
    v = np.empty(n_edges, np.int64)
    # every edge contributes both endpoints, so sampling an entry uniformly
    # picks a vertex with probability proportional to its degree
    ends = np.empty(2 * n_edges, np.int64)
    e = 0
    for a in range(m + 1):
        for b in range(a + 1, m + 1):
            u[e] = a
            v[e] = b
            ends[2 * e] = a
            ends[2 * e + 1] = b
            e += 1
    chosen = np.empty(m, np.int64)
    for t in range(m + 1, n):
        filled = 2 * e
        k = 0
        while k < m:
            c = ends[rng.integers(0, filled)]
            dup = False
            for j in range(k):
                if chosen[j] == c:
                    dup = True
                    break
            if not dup:
                chosen[k] = c
                k += 1
        for j in range(m):
            u[e] = t
            v[e] = chosen[j]
            ends[2 * e] = t
            ends[2 * e + 1] = chosen[j]
            e += 1
    return u, v


def barabasi_albert(n: int, m: int, weight_range=(1, 1000), seed=None,
                    weight_mode: str = INTEGER, snap=None) -> Graph:
    """Preferential-attachment graph grown from a clique on ``m + 1`` vertices.

    Each later vertex attaches to ``m`` distinct existing vertices drawn with
    probability proportional to degree, giving
    ``m*(m+1)/2 + (n-m-1)*m`` undirected edges.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    if m >= n:
        raise ValueError("m must be smaller than n")
    n_edges = m * (m + 1) // 2 + (n - m - 1) * m
    if 2 * n_edges > MAX_INDEX:
        raise CapacityError(f"{n_edges} edges exceed the representable arc count")
    topo_seed, weight_seed = np.random.SeedSequence(seed).spawn(2)
    u, v = _attach(np.random.default_rng(topo_seed), n, m)
    w = _draw_weights(np.random.default_rng(weight_seed), len(u), *weight_range, weight_mode, snap)
    return _undirected(n, u, v, w, weight_mode)
