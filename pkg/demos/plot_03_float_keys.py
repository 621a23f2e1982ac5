"""
Float weights as integer keys
=============================

A non-negative float32 read as an unsigned integer keeps its order. The bucket
queue can index cells by that integer directly.
"""

import numpy as np

from bucket_dijkstra import FLOAT, KeyCodec, dijkstra, erdos_renyi

f32 = KeyCodec("f32")
xs = np.array([0.0, 1e-45, 1.0, 1.5, 2.0, 3.4e38], dtype=np.float32)
print(f32.ordinals(xs))
print(f32.values(f32.ordinals(xs)))

###############################################################################
# Ordinals are not additive. A relaxation adds in the value domain and then
# re-encodes the sum.

k = f32.ordinal_of(1.5)
print(f32.add(k, 2.5) == f32.ordinal_of(4.0))

###############################################################################
# A quantized codec trades precision for a smaller key space. With 10
# mantissa bits and 6 exponent bits there are only 2**16 cells.

q = KeyCodec.parse("quant:10:6")
print(q.key_space, q.values(q.ordinals(np.array([3.14159, 1000.7]))))

###############################################################################
# Searching a float graph: distances come back in weight units.

g = erdos_renyi(10_000, 3, (0.0, 10.0), seed=3, weight_mode=FLOAT)
exact = dijkstra(g, 0, "f32").distances()
coarse = dijkstra(g, 0, "quant:10:6").distances()
reached = np.isfinite(exact)
rel = np.abs(coarse[reached] - exact[reached]) / np.maximum(exact[reached], 1e-30)
print(f"max relative error of quant:10:6 on this graph: {rel.max():.2e}")
