"""Reader and writer for the DIMACS shortest-path ``.gr`` format.

::

    c <comment>
    p sp <n> <m>
    a <u> <v> <w>      (m lines, 1 <= u, v <= n, integer w >= 0)

Vertex ids are 1-based in the file and 0-based in :class:`Graph`.
"""
from __future__ import annotations

import io
import os

import numpy as np

from .errors import DimacsParseError, GraphError
from .graph import INTEGER, Graph, from_arrays


def _int_field(token, lineno, what):
    try:
        return int(token)
    except ValueError:
        raise DimacsParseError(lineno, f"{what} is not an integer: {token!r}") from None


def parse_dimacs_gr(stream) -> Graph:
    """Parse a ``.gr`` text stream (or string) into an integer graph."""
    if isinstance(stream, str):
        stream = io.StringIO(stream)
    n = declared = None
    src, dst, wts = [], [], []
    lineno = 0
    for lineno, line in enumerate(stream, start=1):
        fields = line.split()
        if not fields or fields[0] == "c":
            continue
        tag = fields[0]
        if tag == "p":
            if n is not None:
                raise DimacsParseError(lineno, "second problem line")
            if len(fields) != 4 or fields[1] != "sp":
                raise DimacsParseError(lineno, "problem line must be 'p sp <n> <m>'")
            n = _int_field(fields[2], lineno, "vertex count")
            declared = _int_field(fields[3], lineno, "arc count")
            if n < 1 or declared < 0:
                raise DimacsParseError(lineno, "vertex count must be >= 1 and arc count >= 0")
        elif tag == "a":
            if n is None:
                raise DimacsParseError(lineno, "arc line before the problem line")
            if len(fields) != 4:
                raise DimacsParseError(lineno, "arc line must be 'a <u> <v> <w>'")
            u = _int_field(fields[1], lineno, "arc source")
            v = _int_field(fields[2], lineno, "arc target")
            w = _int_field(fields[3], lineno, "arc weight")
            if not (1 <= u <= n and 1 <= v <= n):
                raise DimacsParseError(lineno, f"vertex id out of range 1..{n}")
            if w < 0:
                raise DimacsParseError(lineno, "negative arc weight")
            if len(src) == declared:
                raise DimacsParseError(lineno, f"more arcs than the declared {declared}")
            src.append(u - 1)
            dst.append(v - 1)
            wts.append(w)
        else:
            raise DimacsParseError(lineno, f"unknown line type {tag!r}")
    if n is None:
        raise DimacsParseError(lineno + 1, "missing problem line")
    if len(src) != declared:
        raise DimacsParseError(lineno + 1, f"declared {declared} arcs, found {len(src)}")
    try:
        return from_arrays(n, np.asarray(src, dtype=np.int64), np.asarray(dst, dtype=np.int64),
                           np.asarray(wts, dtype=np.int64), INTEGER)
    except OverflowError as exc:
        raise DimacsParseError(lineno, f"arc weight too large ({exc})") from None


def read_dimacs_gr(path) -> Graph:
    with open(path, "r", encoding="ascii") as fh:
        return parse_dimacs_gr(fh)


def write_dimacs_gr(graph: Graph, stream=None, comments=()):
    """Write ``graph`` as ``.gr``. Returns the text when ``stream`` is None."""
    if graph.weight_mode != INTEGER:
        raise GraphError("the .gr format only carries integer weights")
    out = io.StringIO() if stream is None else stream
    for c in comments:
        out.write(f"c {c}\n")
    out.write(f"p sp {graph.vertex_count} {graph.arc_count}\n")
    if graph.arc_count:
        block = np.column_stack([graph.sources().astype(np.int64) + 1,
                                 graph.targets.astype(np.int64) + 1,
                                 graph.weights])
        buf = io.StringIO()
        np.savetxt(buf, block, fmt="a %d %d %d", newline="\n")
        out.write(buf.getvalue())
    if stream is None:
        return out.getvalue()
    return None


def save_dimacs_gr(graph: Graph, path, comments=()):
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        write_dimacs_gr(graph, fh, comments)
    return os.fspath(path)
