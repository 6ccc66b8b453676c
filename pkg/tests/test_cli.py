import json
import subprocess
import sys

import pytest

from brickwork.cli import EXIT_FALSIFIED, EXIT_INCOMPLETE, EXIT_OK, EXIT_USAGE, main
from brickwork.io import parse_edge_list, parse_graph6


def run(*argv):
    return subprocess.run(
        [sys.executable, "-m", "brickwork", *argv], capture_output=True, text=True, timeout=600
    )


def test_analyze_gen(capsys):
    assert main(["analyze", "--gen", "w5"]) == EXIT_OK
    d = json.loads(capsys.readouterr().out)
    assert d["hubs"] == [5] and d["solid"] and d["brick_count"] == 1


def test_analyze_stream_csv(tmp_path, capsys):
    f = tmp_path / "g.g6"
    f.write_text("C~\nEqNw\n")
    assert main(["analyze", str(f), "--output", "csv"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 3 and lines[0].startswith("canonical,")


def test_analyze_edgelist_multigraph(tmp_path, capsys):
    f = tmp_path / "w.txt"
    f.write_text("4 7\n0 1\n1 2\n2 0\n3 0\n3 0\n3 1\n3 2\n")
    assert main(["analyze", str(f), "--format", "edgelist"]) == EXIT_OK
    d = json.loads(capsys.readouterr().out)
    assert d["brick"] and d["canonical"].startswith(":")


def test_analyze_dot(capsys):
    assert main(["analyze", "--gen", "c6bar", "--output", "dot"]) == EXIT_OK
    assert "color=red" in capsys.readouterr().out


def test_empty_input_is_usage_error(tmp_path):
    f = tmp_path / "empty.g6"
    f.write_text("")
    assert main(["analyze", str(f)]) == EXIT_USAGE


def test_bad_graph6_names_offset(tmp_path, capsys):
    f = tmp_path / "bad.g6"
    f.write_text("C~\nC \n")
    assert main(["analyze", str(f)]) == EXIT_USAGE
    assert "line 2" in capsys.readouterr().err


def test_gen_and_convert(tmp_path, capsys):
    assert main(["gen", "wheel", "7"]) == EXIT_OK
    text = capsys.readouterr().out
    assert text.splitlines()[0] == "8 14"
    f = tmp_path / "w7.txt"
    f.write_text(text)
    assert main(["convert", str(f), "--in", "edgelist", "--out", "g6"]) == EXIT_OK
    G = parse_graph6(capsys.readouterr().out.strip())
    assert (G.n, G.m) == (8, 14)
    assert main(["convert", str(f), "--in", "edgelist", "--out", "dot", "--annotate"]) == EXIT_OK
    assert "penwidth=3" in capsys.readouterr().out


def test_convert_multigraph_to_g6_fails(tmp_path):
    f = tmp_path / "m.txt"
    f.write_text("2 2\n0 1\n0 1\n")
    assert main(["convert", str(f), "--in", "edgelist", "--out", "g6"]) == EXIT_USAGE


def test_splice(capsys):
    assert main(["splice", "--a", "k4:0", "--b", "k4:0"]) == EXIT_OK
    G = parse_edge_list(capsys.readouterr().out)
    assert (G.n, G.m) == (6, 9)
    assert main(["splice", "--a", "k4:0", "--b", "k4:0", "--theta", "0:1,1:0,2:2"]) == EXIT_OK


def test_splice_degree_mismatch(capsys):
    assert main(["splice", "--a", "w5:5", "--b", "k4:0"]) == EXIT_USAGE
    err = capsys.readouterr().err
    assert "5" in err and "3" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["splice", "--a", "k4", "--b", "k4:0"],
        ["splice", "--a", "k4:9", "--b", "k4:0"],
        ["splice", "--a", "k4:0", "--b", "k4:0", "--theta", "0:7"],
        ["gen", "petersen"],
        ["verify", "--suite", "nonsense"],
        ["verify"],
        ["bogus"],
    ],
)
def test_usage_errors(argv):
    assert main(argv) == EXIT_USAGE


def test_verify_main_theorem_from_stream(tmp_path):
    f = tmp_path / "in.g6"
    f.write_text("C~\nEqNw\n")
    report = tmp_path / "r.json"
    assert main(["verify", "--suite", "main-theorem", "--from", str(f), "--report", str(report)]) == EXIT_OK
    d = json.loads(report.read_text())
    assert d["passed"] and d["suites"]["main-theorem"]["simple"]["checked"] == 2


def test_verify_incomplete_under_tiny_budget(tmp_path):
    f = tmp_path / "in.g6"
    f.write_text("C~\nGqGO^{\n")
    r = run("--pm-cap", "3", "verify", "--suite", "main-theorem", "--from", str(f))
    assert r.returncode == EXIT_INCOMPLETE, r.stderr
    assert "incomplete" in r.stderr


def test_verify_falsified_exit_code(monkeypatch, tmp_path, capsys):
    from brickwork.census import theorem

    real = theorem.check_graph

    def broken(G):
        v = real(G)
        return theorem.GraphVerdict(v.canonical, v.planar_brick, v.wheel_like, v.hubs, "injected")

    monkeypatch.setattr(theorem, "check_graph", broken)
    f = tmp_path / "in.g6"
    f.write_text("C~\n")
    assert main(["verify", "--suite", "main-theorem", "--from", str(f)]) == EXIT_FALSIFIED


def test_module_entry_point():
    r = run("gen", "k4", "--output", "g6")
    assert r.returncode == 0 and r.stdout.strip() == "C~"
