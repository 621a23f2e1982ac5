"""Monotone bucket queue: one doubly linked vertex list per integer key.

Cell ``k`` anchors the list of vertices whose current key is ``k``. Insertion
and decrease-key are O(1); ``pop_min`` scans forward from a cursor that never
moves backwards, so the total scan work of a Dijkstra run is bounded by the
largest key popped.

The logical cell array covers the whole key space (2**32 cells by default), but
it is materialized lazily in pages: a page is allocated the first time a key
inside it is inserted, and a page that was never allocated reads as empty. No
memory is touched for keys above the high-water mark.

Ties within a cell are LIFO: vertices are pushed on and popped from the head.

All queues in this package share one calling convention, used by the Dijkstra
kernels: ``insert(v, k)``, ``decrease_key(v, k)`` and ``pop_min()`` returning
``(v, k)`` or ``(-1, -1)`` when empty.
"""
import numpy as np
from numba import boolean, int32, int64
from numba.experimental import jitclass

from .errors import CapacityError, QueueUsageError

EMPTY = (-1, -1)
MAX_KEY_SPACE = 2**32
PAGE_BITS = 12
PAGE_SIZE = 1 << PAGE_BITS
PAGE_MASK = PAGE_SIZE - 1

# per-vertex node columns; one row keeps a vertex's links and key in one cache line
NEXT = 0
PREV = 1
KEY = 2
NODE_WIDTH = 4

_spec = [
    ("key_space", int64),
    ("capacity", int64),
    ("stop_on_empty", boolean),
    ("cursor", int64),
    ("high_water", int64),
    ("size", int64),
    ("directory", int32[:]),
    ("dir_used", int64),
    ("cells", int32[:]),
    ("pages_used", int64),
    ("node", int64[:, :]),
    ("cells_scanned", int64),
    ("inserts", int64),
    ("decreases", int64),
    ("pops", int64),
]


@jitclass(_spec)
class BucketQueue:
    """Bucket queue over keys ``0 .. key_space-1`` for vertices ``0 .. capacity-1``.

    ``cursor`` is the scan position (the key of the last pop) and ``high_water``
    the largest key ever inserted; ``pop_min`` never scans past it. With
    ``stop_on_empty`` (the default) ``pop_min`` also returns immediately when
    the live count is zero, so after a full run the cursor rests on the largest
    popped key instead of sweeping up to ``high_water``.
    """

    def __init__(self, key_space, capacity, stop_on_empty=True):
        if key_space < 1:
            raise QueueUsageError("key space must hold at least one key")
        if key_space > MAX_KEY_SPACE:
            raise CapacityError("key space larger than 2**32")
        if capacity < 0 or capacity > 2**31 - 1:
            raise CapacityError("vertex capacity out of range")
        self.key_space = key_space
        self.capacity = capacity
        self.stop_on_empty = stop_on_empty
        self.cursor = 0
        self.high_water = 0
        self.size = 0
        self.directory = np.full(1, -1, np.int32)
        self.dir_used = 1
        self.cells = np.empty(PAGE_SIZE, np.int32)
        self.pages_used = 0
        self.node = np.empty((capacity, NODE_WIDTH), np.int64)
        self.node[:, KEY] = -1
        self.cells_scanned = 0
        self.inserts = 0
        self.decreases = 0
        self.pops = 0

    def __len__(self):
        return self.size

    def contains(self, v):
        return self.node[v, KEY] >= 0

    def key_of(self, v):
        return self.node[v, KEY]

    def resident_cells(self):
        """Cells materialized so far (pages times page size)."""
        return self.pages_used * PAGE_SIZE

    def _grow_directory(self, page):
        if page >= self.directory.shape[0]:
            cap = max(2 * self.directory.shape[0], page + 1)
            grown = np.empty(cap, np.int32)
            grown[: self.dir_used] = self.directory[: self.dir_used]
            self.directory = grown
        self.directory[self.dir_used : page + 1] = -1
        self.dir_used = page + 1

    def _cell(self, k):
        page = k >> PAGE_BITS
        slot = self.directory[page]
        if slot < 0:
            slot = self.pages_used
            if (slot + 1) * PAGE_SIZE > self.cells.shape[0]:
                grown = np.empty(2 * self.cells.shape[0], np.int32)
                grown[: slot * PAGE_SIZE] = self.cells[: slot * PAGE_SIZE]
                self.cells = grown
            self.cells[slot * PAGE_SIZE : (slot + 1) * PAGE_SIZE] = -1
            self.directory[page] = slot
            self.pages_used += 1
        return (np.int64(slot) << PAGE_BITS) | (k & PAGE_MASK)

    def _link(self, v, k):
        if k > self.high_water:
            self.high_water = k
            page = k >> PAGE_BITS
            if page >= self.dir_used:
                self._grow_directory(page)
        c = self._cell(k)
        head = self.cells[c]
        self.node[v, NEXT] = head
        self.node[v, PREV] = -1
        if head >= 0:
            self.node[head, PREV] = v
        self.cells[c] = v
        self.node[v, KEY] = k

    def _unlink(self, v):
        k = self.node[v, KEY]
        p = self.node[v, PREV]
        n = self.node[v, NEXT]
        if p >= 0:
            self.node[p, NEXT] = n
        else:
            page = k >> PAGE_BITS
            self.cells[(np.int64(self.directory[page]) << PAGE_BITS) | (k & PAGE_MASK)] = n
        if n >= 0:
            self.node[n, PREV] = p
        self.node[v, KEY] = -1

    def _check(self, v, k):
        if v < 0 or v >= self.capacity:
            raise QueueUsageError("vertex id out of range")
        if k < 0 or k >= self.key_space:
            raise QueueUsageError("key outside the key space")
        if k < self.cursor:
            raise QueueUsageError("key below the scan cursor (monotone contract)")

    def insert(self, v, k):
        self._check(v, k)
        if self.node[v, KEY] >= 0:
            raise QueueUsageError("vertex is already in the queue")
        self._link(v, k)
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

    def pop_min(self):
        if self.stop_on_empty and self.size == 0:
            return -1, -1
        while self.cursor <= self.high_water:
            self.cells_scanned += 1
            page = self.cursor >> PAGE_BITS
            slot = self.directory[page]
            if slot < 0:
                # never-allocated page: every cell in it is empty
                self.cursor = min((page + 1) << PAGE_BITS, self.high_water + 1)
                continue
            c = (np.int64(slot) << PAGE_BITS) | (self.cursor & PAGE_MASK)
            v = self.cells[c]
            if v >= 0:
                n = self.node[v, NEXT]
                self.cells[c] = n
                if n >= 0:
                    self.node[n, PREV] = -1
                self.node[v, KEY] = -1
                self.size -= 1
                self.pops += 1
                return np.int64(v), self.cursor
            self.cursor += 1
        return -1, -1
