"""
A small timing table
====================

Time every queue kind on one generated graph, from the same random sources.
"""

from bucket_dijkstra.bench import BenchSpec, GraphSpec, format_table, run_bench, write_bench_csv

spec = BenchSpec(GraphSpec("er", n=200_000, density=2.5, wmin=1, wmax=1000, seed=0),
                 trials=5, source_seed=0)
report = run_bench(spec)
print(format_table(report.rows))

###############################################################################
# The CSV carries the same rows plus operation counts.

print(write_bench_csv(report.rows))
