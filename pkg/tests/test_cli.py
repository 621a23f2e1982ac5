import csv
import subprocess
import sys

import pytest

from bucket_dijkstra.cli import main
from helpers import DATA

PATH_GR = str(DATA / "path.gr")


def _problem_line(path):
    return next(line for line in path.read_text().splitlines() if line.startswith("p "))


def test_gen_er(tmp_path):
    out = tmp_path / "er.gr"
    assert main(["gen", "er", "--n", "1000", "--density", "2.5", "--seed", "7", "--out", str(out)]) == 0
    assert _problem_line(out) == "p sp 1000 5000"


def test_gen_ba(tmp_path):
    out = tmp_path / "ba.gr"
    assert main(["gen", "ba", "--n", "100", "--m", "2", "--seed", "7", "--out", str(out)]) == 0
    assert _problem_line(out) == "p sp 100 394"


@pytest.mark.parametrize("model,arg", [("er", ["--density", "3"]), ("ba", ["--m", "3"])])
def test_gen_is_byte_identical(tmp_path, model, arg):
    a, b = tmp_path / "a.gr", tmp_path / "b.gr"
    for out in (a, b):
        main(["gen", model, "--n", "2000", *arg, "--seed", "11", "--out", str(out)])
    assert a.read_bytes() == b.read_bytes()


def test_run_path_fixture(capsys):
    assert main(["run", "--graph", PATH_GR, "--source", "0"]) == 0
    out = capsys.readouterr().out
    assert "U 5 " in out and "pops 3 " in out


@pytest.mark.parametrize("queue", ["bucket", "chunked:16", "heap:8"])
def test_run_verify(capsys, queue):
    code = main(["run", "--gen", "er", "--n", "3000", "--density", "2.5", "--seed", "1",
                 "--queue", queue, "--verify"])
    out = capsys.readouterr().out
    assert code == 0
    assert "verify ok" in out and "bellman_ford agrees" in out


def test_run_verify_skips_oracle_on_large_graphs(capsys):
    assert main(["run", "--gen", "er", "--n", "20000", "--density", "2", "--verify"]) == 0
    assert "bellman_ford skipped" in capsys.readouterr().out


def test_run_dist_out(tmp_path):
    ints = tmp_path / "d.txt"
    main(["run", "--graph", PATH_GR, "--dist-out", str(ints)])
    assert ints.read_text() == "0\n2\n5\n"
    floats = tmp_path / "f.txt"
    main(["run", "--graph", PATH_GR, "--source", "1", "--keys", "f32", "--dist-out", str(floats)])
    assert floats.read_text() == "inf\n0.0\n3.0\n"


def test_bad_file_exits_2_with_line_number(capsys):
    code = main(["run", "--graph", str(DATA / "corrupt" / "bad_weight.gr")])
    assert code == 2
    assert "line 3:" in capsys.readouterr().err


def test_usage_and_runtime_errors(tmp_path, capsys):
    assert main(["run", "--graph", PATH_GR, "--source", "9"]) == 2
    assert main(["run", "--graph", str(tmp_path / "missing.gr")]) == 1
    assert main(["bench", "--graph", PATH_GR, "--queue", ""]) == 2
    assert main(["sweep", "--gen", "er", "--n", "", "--density", "2"]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["run", "--graph", PATH_GR, "--queue", "fib"])
    assert exc.value.code == 2


def test_bench_csv(tmp_path, capsys):
    out = tmp_path / "b.csv"
    code = main(["bench", "--graph", PATH_GR, "--source", "0", "--trials", "2",
                 "--queue", "bucket,heap:2", "--csv", str(out)])
    assert code == 0
    rows = list(csv.DictReader(out.open()))
    assert [r["queue"] for r in rows] == ["bucket", "heap:2"]
    assert "Speedup" in capsys.readouterr().out


def test_sweep_csv(tmp_path):
    out = tmp_path / "s.csv"
    code = main(["sweep", "--gen", "ba", "--m", "2", "--n", "1000,2000,4000", "--trials", "1",
                 "--queue", "bucket,heap:4", "--csv", str(out)])
    assert code == 0
    rows = list(csv.DictReader(out.open()))
    assert [int(r["n"]) for r in rows] == [1000, 2000, 4000]
    assert set(rows[0]) == {"model", "n", "density", "m", "bucket", "heap:4"}


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "bucket_dijkstra", "run", "--graph", PATH_GR,
                           "--queue", "heap:2"], capture_output=True, text=True, timeout=600)
    assert proc.returncode == 0, proc.stderr
    assert "U 5 " in proc.stdout
