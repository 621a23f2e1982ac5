import io

import numpy as np
import pytest

from bucket_dijkstra import (FLOAT, DimacsParseError, GraphError, barabasi_albert, build_graph,
                             erdos_renyi, parse_dimacs_gr, read_dimacs_gr, save_dimacs_gr,
                             write_dimacs_gr)
from helpers import CORRUPT_FIXTURES, DATA


def test_read_path_fixture(path_graph):
    assert read_dimacs_gr(DATA / "path.gr") == path_graph


def test_write_format(path_graph):
    text = write_dimacs_gr(path_graph, comments=["hello"])
    assert text == "c hello\np sp 3 2\na 1 2 2\na 2 3 3\n"


def test_stream_and_file_round_trip(tmp_path, path_graph):
    buf = io.StringIO()
    write_dimacs_gr(path_graph, buf)
    buf.seek(0)
    assert parse_dimacs_gr(buf) == path_graph
    p = save_dimacs_gr(path_graph, tmp_path / "g.gr")
    assert read_dimacs_gr(p) == path_graph


def test_edge_cases_round_trip():
    for g in (build_graph(1, []), build_graph(2, [(0, 0, 0), (0, 1, 0), (0, 1, 0)]),
              build_graph(2, [(1, 0, 2**40)])):
        assert parse_dimacs_gr(write_dimacs_gr(g)) == g


@pytest.mark.parametrize("seed", range(10))
def test_generated_round_trip(seed):
    for g in (erdos_renyi(300, 2.5, seed=seed), barabasi_albert(300, 2, seed=seed)):
        assert parse_dimacs_gr(write_dimacs_gr(g)) == g


def test_blank_lines_and_comments_are_skipped():
    g = parse_dimacs_gr("\nc x\np sp 2 1\n\nc y\na 1 2 5\n")
    assert list(g.arcs()) == [(0, 1, 5)]


def test_float_graph_cannot_be_written():
    with pytest.raises(GraphError):
        write_dimacs_gr(build_graph(2, [(0, 1, 0.5)], FLOAT))


@pytest.mark.parametrize("name,line", sorted(CORRUPT_FIXTURES.items()))
def test_corrupted_fixture_line_numbers(name, line):
    with pytest.raises(DimacsParseError) as info:
        read_dimacs_gr(DATA / "corrupt" / name)
    assert info.value.lineno == line
    assert str(info.value).startswith(f"line {line}:")


def test_parse_error_is_a_graph_error():
    assert issubclass(DimacsParseError, GraphError)
    with pytest.raises(GraphError):
        parse_dimacs_gr("p sp 0 0\n")
