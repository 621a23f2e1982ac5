"""
Same distances, different queues
================================

The bucket queue, its chunked variant, and indexed d-ary heaps all settle the
same distances. What differs is the work behind each pop.
"""

import numpy as np

from bucket_dijkstra import dijkstra, erdos_renyi

g = erdos_renyi(100_000, 2.5, weight_range=(1, 1000), seed=1)

kinds = ("bucket", "chunked", "chunked:12", "heap:2", "heap:4", "heap:8")
runs = {q: dijkstra(g, 0, queue=q) for q in kinds}
base = runs["bucket"].dist
for q, r in runs.items():
    assert np.array_equal(r.dist, base)

###############################################################################
# The bucket queue pays one step per cell it scans. Over a whole run that is
# bounded by the largest distance U plus the number of pops.

s = runs["bucket"].stats
print(f"U={s.U}  pops={s.pops}  cells scanned={s.cells_scanned}  bound={s.U + s.pops}")

###############################################################################
# The chunked queue keeps only one chunk of cells expanded. Everything further
# out sits in one unsorted list per chunk until the cursor gets there. The
# default chunk holds 2**16 keys, more than U here, so it never expands;
# 4096-key chunks do.

for q in ("chunked", "chunked:12"):
    print(f"{q}: expansions={runs[q].stats.expansions}")

###############################################################################
# Wall time includes allocating the queue. Numba compiles each queue type on
# first use, so time a second call.

for q in runs:
    print(f"{q:>10}: {dijkstra(g, 0, queue=q).stats.wall_time * 1e3:7.1f} ms")
