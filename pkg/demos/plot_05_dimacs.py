"""
Reading and writing .gr files
=============================

Graphs travel in the DIMACS shortest-path format. Vertex ids are 1-based in
files and 0-based in memory.
"""

import tempfile
from pathlib import Path

from bucket_dijkstra import (DimacsParseError, barabasi_albert, parse_dimacs_gr, read_dimacs_gr,
                             save_dimacs_gr)

g = barabasi_albert(1000, 2, seed=7)
path = Path(tempfile.mkdtemp()) / "ba.gr"
save_dimacs_gr(g, path, comments=["ba n=1000 m=2 seed=7"])
print(path.read_text().splitlines()[:4])
assert read_dimacs_gr(path) == g

###############################################################################
# Parse errors point at the offending line.

try:
    parse_dimacs_gr("p sp 3 2\na 1 2 2\na 2 9 3\n")
except DimacsParseError as exc:
    print(exc)
