"""Test oracles shared by several modules."""
import heapq
from fractions import Fraction
from pathlib import Path

import numpy as np
from numba import njit

INSERT, DECREASE, POP = 0, 1, 2


def monotone_ops(rng, n_ops, key_space, span, p_pop=0.35, p_decrease=0.25, empty_pops=True):
    """Random operation sequence that respects the monotone contract.

    Returns ``(kind, vertex, key, expected_pop_key, expected_size)`` arrays. The
    expected values come from an ordered-multiset model (a heap of keys) that
    never needs to know which of several equal-key vertices is popped: vertices
    whose key equals the last popped key are never addressed again, so every
    queue sees identical, valid vertex references regardless of tie-breaking.

    With ``empty_pops=False`` no pop is issued on an empty queue, which keeps the
    sequence valid for queues whose cursor runs past ``high_water`` when empty.
    """
    kinds, verts, keys, exp_pop, exp_size = [], [], [], [], []
    floor = 0
    live = {}          # vertex -> key, only for keys strictly above ``floor``
    heap = []          # (key, vertex) with lazy deletion
    at_floor = 0       # live vertices whose key equals ``floor``
    next_v = 0
    for _ in range(n_ops):
        r = rng.random()
        size = len(live) + at_floor
        if r < p_pop and (empty_pops or size > 0):
            kinds.append(POP)
            verts.append(-1)
            keys.append(-1)
            if size == 0:
                exp_pop.append(-1)
            else:
                if at_floor == 0:
                    while True:
                        k, v = heapq.heappop(heap)
                        if live.get(v) == k:
                            break
                    floor = k
                    del live[v]
                    # all other vertices at this key become anonymous ties
                    same = [u for u, ku in live.items() if ku == k]
                    for u in same:
                        del live[u]
                    at_floor = len(same)
                else:
                    at_floor -= 1
                exp_pop.append(floor)
        elif r < p_pop + p_decrease and live:
            v = list(live)[int(rng.integers(len(live)))]
            old = live[v]
            k = int(rng.integers(floor, old))
            kinds.append(DECREASE)
            verts.append(v)
            keys.append(k)
            exp_pop.append(-1)
            if k == floor:
                del live[v]
                at_floor += 1
            else:
                live[v] = k
                heapq.heappush(heap, (k, v))
        else:
            k = int(min(key_space - 1, floor + rng.integers(0, span + 1)))
            v = next_v
            next_v += 1
            kinds.append(INSERT)
            verts.append(v)
            keys.append(k)
            exp_pop.append(-1)
            if k == floor:
                at_floor += 1
            else:
                live[v] = k
                heapq.heappush(heap, (k, v))
        exp_size.append(len(live) + at_floor)
    as_arr = lambda x: np.asarray(x, dtype=np.int64)
    return as_arr(kinds), as_arr(verts), as_arr(keys), as_arr(exp_pop), as_arr(exp_size), next_v


@njit
def replay(q, kinds, verts, keys):
    """Apply an op sequence; return popped keys, popped vertices, sizes."""
    n = len(kinds)
    popped = np.full(n, -1, np.int64)
    popped_v = np.full(n, -1, np.int64)
    sizes = np.empty(n, np.int64)
    for i in range(n):
        if kinds[i] == 0:
            q.insert(verts[i], keys[i])
        elif kinds[i] == 1:
            q.decrease_key(verts[i], keys[i])
        else:
            v, k = q.pop_min()
            popped[i] = k
            popped_v[i] = v
        sizes[i] = len(q)
    return popped, popped_v, sizes


@njit
def replay_chunked(q, kinds, verts, keys):
    """``replay`` plus the resident anchor count after every operation."""
    n = len(kinds)
    popped = np.full(n, -1, np.int64)
    sizes = np.empty(n, np.int64)
    anchors = np.empty(n, np.int64)
    for i in range(n):
        if kinds[i] == 0:
            q.insert(verts[i], keys[i])
        elif kinds[i] == 1:
            q.decrease_key(verts[i], keys[i])
        else:
            v, k = q.pop_min()
            popped[i] = k
        sizes[i] = len(q)
        anchors[i] = q.resident_anchors()
    return popped, sizes, anchors


def random_graph_arcs(rng, n, density, wmax, wmin=0):
    """Directed arcs with about ``density * n`` arcs, self-loops allowed."""
    m = int(rng.integers(0, int(density * n) + 1))
    u = rng.integers(0, n, size=m)
    v = rng.integers(0, n, size=m)
    w = rng.integers(wmin, wmax + 1, size=m)
    return u, v, w


def fraction_bellman_ford(n, arcs, source):
    """Exact rational shortest distances; ``None`` marks unreachable."""
    dist = [None] * n
    dist[source] = Fraction(0)
    for _ in range(n):
        changed = False
        for u, v, w in arcs:
            if dist[u] is None:
                continue
            cand = dist[u] + Fraction(w)
            if dist[v] is None or cand < dist[v]:
                dist[v] = cand
                changed = True
        if not changed:
            break
    return dist


DATA = Path(__file__).parent / "data"

# corrupted .gr fixtures and the line each parse error must point at
CORRUPT_FIXTURES = {
    "arc_before_p.gr": 2,
    "bad_weight.gr": 3,
    "missing_p.gr": 2,
    "negative_weight.gr": 3,
    "second_p.gr": 2,
    "short_arc.gr": 3,
    "too_few_arcs.gr": 4,
    "too_many_arcs.gr": 3,
    "unknown_tag.gr": 2,
    "vertex_out_of_range.gr": 3,
    "vertex_zero.gr": 3,
    "wrong_problem.gr": 1,
}
