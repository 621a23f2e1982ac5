"""
A first shortest-path search
============================

Build a small graph, search it with the bucket queue, and read the result.
"""

import numpy as np

from bucket_dijkstra import build_graph, dijkstra, verify_result

# arcs are (source, target, weight); vertex 4 is not reachable from 0
g = build_graph(5, [(0, 1, 2), (1, 2, 3), (0, 2, 7), (2, 3, 1), (4, 0, 1)])

res = dijkstra(g, 0)
print("keys      ", res.dist)          # -1 marks unreached vertices
print("distances ", res.distances())   # inf for the same vertices

###############################################################################
# Every pop is logged as (vertex, key). Keys never go down, which is what lets
# the queue scan forward without ever looking back.

print(res.pop_order)

# the first call in a process includes compiling the queue, hence wall_time
print(res.stats)

###############################################################################
# ``verify_result`` re-checks the answer from scratch: pop order, one
# relaxation pass over every arc, and the source distance.

print(verify_result(g, res))

res.dist[3] = 9
print(verify_result(g, res))
