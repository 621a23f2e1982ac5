"""Indexed d-ary min-heap: the comparison baseline for the bucket queues.

Keys and vertex ids are kept side by side in the heap arrays and a
per-vertex position table makes ``decrease_key`` a plain sift-up.
"""
import numpy as np
from numba import int32, int64
from numba.experimental import jitclass

from .errors import CapacityError, QueueUsageError

_spec = [
    ("arity", int64),
    ("shift", int64),
    ("capacity", int64),
    ("size", int64),
    ("heap_vertex", int32[:]),
    ("heap_key", int64[:]),
    ("pos", int32[:]),
    ("inserts", int64),
    ("decreases", int64),
    ("pops", int64),
]


@jitclass(_spec)
class DaryHeap:
    def __init__(self, arity, capacity):
        if arity < 2:
            raise QueueUsageError("heap arity must be at least 2")
        if capacity < 0 or capacity > 2**31 - 1:
            raise CapacityError("vertex capacity out of range")
        self.arity = arity
        # power-of-two arities index children with shifts
        self.shift = -1
        if arity & (arity - 1) == 0:
            s = 0
            while (1 << s) < arity:
                s += 1
            self.shift = s
        self.capacity = capacity
        self.size = 0
        self.heap_vertex = np.empty(capacity, np.int32)
        self.heap_key = np.empty(capacity, np.int64)
        self.pos = np.full(capacity, -1, np.int32)
        self.inserts = 0
        self.decreases = 0
        self.pops = 0

    def __len__(self):
        return self.size

    def contains(self, v):
        return self.pos[v] >= 0

    def key_of(self, v):
        p = self.pos[v]
        if p < 0:
            return np.int64(-1)
        return self.heap_key[p]

    def _parent(self, i):
        if self.shift >= 0:
            return (i - 1) >> self.shift
        return (i - 1) // self.arity

    def _first_child(self, i):
        if self.shift >= 0:
            return (i << self.shift) + 1
        return i * self.arity + 1

    def _sift_up(self, i, v, k):
        while i > 0:
            p = self._parent(i)
            pk = self.heap_key[p]
            if pk <= k:
                break
            pv = self.heap_vertex[p]
            self.heap_vertex[i] = pv
            self.heap_key[i] = pk
            self.pos[pv] = i
            i = p
        self.heap_vertex[i] = v
        self.heap_key[i] = k
        self.pos[v] = i

    def _sift_down(self, i, v, k):
        n = self.size
        while True:
            c = self._first_child(i)
            if c >= n:
                break
            end = min(c + self.arity, n)
            best = c
            best_key = self.heap_key[c]
            for j in range(c + 1, end):
                jk = self.heap_key[j]
                if jk < best_key:
                    best = j
                    best_key = jk
            if best_key >= k:
                break
            bv = self.heap_vertex[best]
            self.heap_vertex[i] = bv
            self.heap_key[i] = best_key
            self.pos[bv] = i
            i = best
        self.heap_vertex[i] = v
        self.heap_key[i] = k
        self.pos[v] = i

    def insert(self, v, k):
        if v < 0 or v >= self.capacity:
            raise QueueUsageError("vertex id out of range")
        if k < 0:
            raise QueueUsageError("negative key")
        if self.pos[v] >= 0:
            raise QueueUsageError("vertex is already in the queue")
        i = self.size
        self.size += 1
        self._sift_up(i, v, k)
        self.inserts += 1

    def decrease_key(self, v, k):
        if v < 0 or v >= self.capacity:
            raise QueueUsageError("vertex id out of range")
        p = self.pos[v]
        if p < 0:
            raise QueueUsageError("vertex is not in the queue")
        if k >= self.heap_key[p]:
            raise QueueUsageError("decrease_key needs a strictly smaller key")
        if k < 0:
            raise QueueUsageError("negative key")
        self._sift_up(p, v, k)
        self.decreases += 1

    def pop_min(self):
        if self.size == 0:
            return -1, -1
        v = self.heap_vertex[0]
        k = self.heap_key[0]
        self.pos[v] = -1
        self.size -= 1
        if self.size > 0:
            self._sift_down(0, self.heap_vertex[self.size], self.heap_key[self.size])
        self.pops += 1
        return np.int64(v), k
