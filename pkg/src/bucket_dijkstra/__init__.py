"""Dijkstra's algorithm on monotone bucket queues.

Integer and float distance keys, a chunked two-level variant of the queue,
an indexed d-ary heap baseline, a Bellman-Ford oracle, random graph
generators, DIMACS ``.gr`` I/O and a benchmark harness.
"""
from .bucket_queue import EMPTY, BucketQueue
from .chunked_queue import ChunkedBucketQueue, default_chunk_size
from .dimacs import parse_dimacs_gr, read_dimacs_gr, save_dimacs_gr, write_dimacs_gr
from .errors import (CapacityError, DimacsParseError, GraphError, KeyDomainError,
                     KeyOverflowError, QueueUsageError)
from .graph import FLOAT, INTEGER, Graph, barabasi_albert, build_graph, erdos_renyi, from_arrays
from .heap import DaryHeap
from .keys import KeyCodec
from .sssp import (UNREACHABLE, QueueKind, RunStats, SsspResult, bellman_ford, dijkstra,
                   dijkstra_heap, verify_result)

__all__ = [
    "EMPTY", "BucketQueue", "ChunkedBucketQueue", "default_chunk_size", "DaryHeap",
    "parse_dimacs_gr", "read_dimacs_gr", "save_dimacs_gr", "write_dimacs_gr",
    "CapacityError", "DimacsParseError", "GraphError", "KeyDomainError", "KeyOverflowError",
    "QueueUsageError", "FLOAT", "INTEGER", "Graph", "barabasi_albert", "build_graph",
    "erdos_renyi", "from_arrays", "KeyCodec", "UNREACHABLE", "QueueKind", "RunStats",
    "SsspResult", "bellman_ford", "dijkstra", "dijkstra_heap", "verify_result",
]
