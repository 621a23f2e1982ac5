"""Chunked bucket queue that keeps only one slice of the key space expanded.

The key space is cut into ``num_chunks`` chunks of ``chunk_size`` keys. The
chunk holding the cursor is *active* and has one cell per key; every other
chunk is *condensed* into a single unordered list. When the cursor runs off
the end of the active chunk, the next non-empty condensed chunk is expanded:
its list is walked and each vertex is pushed onto the head of its exact-key
cell. Resident anchors are always ``chunk_size + num_chunks``.

Observable pop keys match :class:`BucketQueue`; the order of equal keys can
differ because expansion re-threads the lists.
"""
import math

import numpy as np
from numba import boolean, int32, int64
from numba.experimental import jitclass

from .bucket_queue import KEY, MAX_KEY_SPACE, NEXT, NODE_WIDTH, PREV
from .errors import CapacityError, QueueUsageError

_spec = [
    ("key_space", int64),
    ("capacity", int64),
    ("chunk_size", int64),
    ("num_chunks", int64),
    ("stop_on_empty", boolean),
    ("active_index", int64),
    ("active_base", int64),
    ("cursor", int64),
    ("high_water", int64),
    ("size", int64),
    ("active_cells", int32[:]),
    ("condensed", int32[:]),
    ("node", int64[:, :]),
    ("cells_scanned", int64),
    ("anchors_scanned", int64),
    ("expansions", int64),
    ("inserts", int64),
    ("decreases", int64),
    ("pops", int64),
]


def default_chunk_size(key_space: int) -> int:
    """Smallest divisor of ``key_space`` that is at least its square root."""
    if key_space < 1:
        raise ValueError("key space must be positive")
    root = math.isqrt(key_space)
    for d in range(root, 0, -1):
        if key_space % d == 0:
            return key_space // d
    return key_space


@jitclass(_spec)
class ChunkedBucketQueue:
    """Two-level bucket queue. Same calling convention as ``BucketQueue``."""

    def __init__(self, key_space, chunk_size, capacity, stop_on_empty=True):
        if key_space < 1:
            raise QueueUsageError("key space must hold at least one key")
        if key_space > MAX_KEY_SPACE:
            raise CapacityError("key space larger than 2**32")
        if chunk_size < 1 or key_space % chunk_size != 0:
            raise QueueUsageError("chunk size must divide the key space")
        if capacity < 0 or capacity > 2**31 - 1:
            raise CapacityError("vertex capacity out of range")
        self.key_space = key_space
        self.capacity = capacity
        self.chunk_size = chunk_size
        self.num_chunks = key_space // chunk_size
        self.stop_on_empty = stop_on_empty
        self.active_index = 0
        self.active_base = 0
        self.cursor = 0
        self.high_water = 0
        self.size = 0
        self.active_cells = np.full(chunk_size, -1, np.int32)
        self.condensed = np.full(self.num_chunks, -1, np.int32)
        self.node = np.empty((capacity, NODE_WIDTH), np.int64)
        self.node[:, KEY] = -1
        self.cells_scanned = 0
        self.anchors_scanned = 0
        self.expansions = 0
        self.inserts = 0
        self.decreases = 0
        self.pops = 0

    def __len__(self):
        return self.size

    def contains(self, v):
        return self.node[v, KEY] >= 0

    def key_of(self, v):
        return self.node[v, KEY]

    def resident_anchors(self):
        return self.active_cells.shape[0] + self.condensed.shape[0]

    def in_active(self, v):
        """True when live vertex ``v`` sits in an exact-key active cell."""
        return self.node[v, KEY] // self.chunk_size == self.active_index

    def _link(self, v, k):
        c = k // self.chunk_size
        active = c == self.active_index
        if active:
            head = self.active_cells[k - self.active_base]
        else:
            head = self.condensed[c]
        self.node[v, NEXT] = head
        self.node[v, PREV] = -1
        if head >= 0:
            self.node[head, PREV] = v
        if active:
            self.active_cells[k - self.active_base] = v
        else:
            self.condensed[c] = v
        self.node[v, KEY] = k

    def _unlink(self, v):
        k = self.node[v, KEY]
        p = self.node[v, PREV]
        n = self.node[v, NEXT]
        if p >= 0:
            self.node[p, NEXT] = n
        else:
            c = k // self.chunk_size
            if c == self.active_index:
                self.active_cells[k - self.active_base] = n
            else:
                self.condensed[c] = n
        if n >= 0:
            self.node[n, PREV] = p
        self.node[v, KEY] = -1

    def _check(self, v, k):
        if v < 0 or v >= self.capacity:
            raise QueueUsageError("vertex id out of range")
        if k < 0 or k >= self.key_space:
            raise QueueUsageError("key outside the key space")
        if k < self.active_base:
            raise QueueUsageError("key falls in an already passed chunk")
        if k < self.cursor:
            raise QueueUsageError("key below the scan cursor (monotone contract)")

    def insert(self, v, k):
        self._check(v, k)
        if self.node[v, KEY] >= 0:
            raise QueueUsageError("vertex is already in the queue")
        self._link(v, k)
        if k > self.high_water:
            self.high_water = k
        self.size += 1
        self.inserts += 1

    def decrease_key(self, v, k):
        self._check(v, k)
        old = self.node[v, KEY]
        if old < 0:
            raise QueueUsageError("vertex is not in the queue")
        if k >= old:
            raise QueueUsageError("decrease_key needs a strictly smaller key")
        self._unlink(v)
        self._link(v, k)
        self.decreases += 1

    def _expand(self, c):
        v = self.condensed[c]
        self.condensed[c] = -1
        self.active_index = c
        self.active_base = c * self.chunk_size
        while v >= 0:
            n = self.node[v, NEXT]
            cell = self.node[v, KEY] - self.active_base
            head = self.active_cells[cell]
            self.node[v, NEXT] = head
            self.node[v, PREV] = -1
            if head >= 0:
                self.node[head, PREV] = v
            self.active_cells[cell] = v
            v = n
        self.cursor = self.active_base
        self.expansions += 1

    def pop_min(self):
        if self.stop_on_empty and self.size == 0:
            return -1, -1
        while self.cursor <= self.high_water:
            if self.cursor < self.active_base + self.chunk_size:
                self.cells_scanned += 1
                v = self.active_cells[self.cursor - self.active_base]
                if v >= 0:
                    self._unlink(v)
                    self.size -= 1
                    self.pops += 1
                    return np.int64(v), self.cursor
                self.cursor += 1
                continue
            last = self.high_water // self.chunk_size
            c = self.active_index + 1
            while c <= last and self.condensed[c] < 0:
                self.anchors_scanned += 1
                c += 1
            if c > last:
                self.cursor = self.high_water + 1
                break
            self.anchors_scanned += 1
            self._expand(c)
        return -1, -1
