import json
import subprocess
import sys

import pytest

from coplab.cli import main
from coplab.graph import read_edgelist, write_edgelist, petersen_graph, cycle_graph


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


@pytest.fixture
def files(tmp_path):
    p = tmp_path / "petersen.edges"
    write_edgelist(petersen_graph(), p)
    c = tmp_path / "c5.edges"
    write_edgelist(cycle_graph(5), c)
    return tmp_path, p, c


def test_construct_incidence_with_labels(capsys, tmp_path):
    out, labels = tmp_path / "h.edges", tmp_path / "h.json"
    code, _ = run(capsys, "construct", "incidence", "--q", "2", "--out", str(out), "--labels", str(labels))
    assert code == 0 and read_edgelist(out).n == 14
    lab = json.loads(labels.read_text())
    assert lab["0"]["type"] == "point" and lab["13"]["type"] == "line"


def test_construct_products(capsys, files):
    tmp, p, c = files
    code, text = run(capsys, "construct", "double-cover", "--graph", str(c))
    assert code == 0 and text.splitlines()[0] == "10 10"
    code, text = run(capsys, "construct", "lex", "--graph", str(c), "--other", str(c))
    assert text.splitlines()[0].split()[0] == "25"
    code, text = run(capsys, "--seed", "3", "construct", "bf", "--q", "3", "--m", "3")
    assert text.splitlines()[0] == "78 156"


def test_metrics_and_certify(capsys, files):
    _, p, _ = files
    code, text = run(capsys, "metrics", str(p))
    assert json.loads(text)["girth"] == 5
    code, text = run(capsys, "certify", str(p), "--kind", "girth5")
    js = json.loads(text)
    assert js["kind"] == "GIRTH5_LOWER" and js["bound_num"] == 3
    code, text = run(capsys, "certify", str(p), "--kind", "k2t", "--t", "2", "--D", "3")
    assert json.loads(text)["bound_den"] == 2


def test_copnumber(capsys, files):
    _, p, _ = files
    code, text = run(capsys, "copnumber", str(p), "--kmax", "3")
    assert json.loads(text)["cop_number"] == 3
    code, text = run(capsys, "copnumber", str(p), "--kmax", "2")
    assert json.loads(text)["cop_number"] is None
    code = main(["copnumber", str(p), "--kmax", "3", "--budget", "10"])
    assert code == 2


def test_simulate_writes_trace(capsys, files):
    tmp, p, _ = files
    trace = tmp / "t.json"
    code, text = run(capsys, "simulate", str(p), "--cops", "2", "--robber", "evasion_girth5",
                     "--rounds", "40", "--trace", str(trace))
    assert json.loads(text)["outcome"] == "SURVIVED"
    js = json.loads(trace.read_text())
    assert js["outcome"] == "SURVIVED" and len(js["rounds"]) == 41
    code, text = run(capsys, "simulate", str(p), "--cop", "optimal", "--cops", "3",
                     "--robber", "optimal", "--rounds", "40")
    assert json.loads(text)["outcome"] == "CAPTURED"


@pytest.mark.parametrize("mode", ["domination", "dlc", "buckets"])
def test_cover(capsys, files, mode):
    _, p, _ = files
    code, text = run(capsys, "cover", str(p), "--mode", mode)
    js = json.loads(text)
    assert code == 0
    assert {"tau", "tau_star_num", "tau_star_den", "greedy_size", "bound", "witness"} <= set(js)
    assert (js["tau_star_num"], js["tau_star_den"]) == (10, 3) or mode == "dlc"


def test_count(capsys):
    code, text = run(capsys, "count", "--a", "3", "--d", "3", "--verify")
    js = json.loads(text)
    assert js["exact_count"] == 10 and js["passed"]


def test_sweep_exit_codes(capsys, tmp_path):
    code, text = run(capsys, "--out-dir", str(tmp_path), "sweep", "--kind", "incidence", "--q", "2", "3")
    assert code == 0 and (tmp_path / "sweep_incidence.csv").exists()
    code, _ = run(capsys, "sweep", "--kind", "strip", "--q", "3", "--i", "1", "9")
    assert code == 1
    code, text = run(capsys, "sweep", "--kind", "incidence", "--Q", "4")
    assert code == 0 and len(text.splitlines()) == 5


def test_family_audit(capsys, tmp_path):
    csv_path = tmp_path / "rows.csv"
    csv_path.write_text("n,order,bound\n2,14,3\n3,26,4\n")
    code, text = run(capsys, "family-audit", str(csv_path))
    assert code == 0 and text.splitlines()[-1].startswith("# constant,0.7844")


def test_errors_exit_nonzero(capsys, tmp_path):
    bad = tmp_path / "bad.edges"
    bad.write_text("3 1\n0 0\n")
    assert main(["metrics", str(bad)]) == 2
    assert "EdgeListError" in capsys.readouterr().err


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "coplab.cli", "count", "--a", "2", "--d", "2"],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["exact_count"] == 3
