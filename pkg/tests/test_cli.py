import io
import json
import os

import pytest

from cfc_lab.cli import (
    EXIT_FAILED,
    EXIT_INPUT,
    EXIT_OK,
    EXIT_USAGE,
    _config_from,
    build_parser,
    main,
    resolve_threads,
)
from cfc_lab.families import h_graph, path, star
from cfc_lab.formats import format_colored_edge_list, format_edge_list, format_graph6, parse_graph
from cfc_lab.coloring import EdgeColoring
from cfc_lab.construct import color_H


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        target = tmp_path / name
        target.write_text(text)
        return str(target)
    return _write


def run(capsys, argv):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_exact_on_a_star(capsys, write):
    code, out, _ = run(capsys, ["cfc", "exact", write("star6.el", format_edge_list(star(7)))])
    assert code == EXIT_OK
    assert out.strip() == "6"


def test_exact_with_witness_and_stats(capsys, write, tmp_path):
    witness = tmp_path / "w.cel"
    stats = tmp_path / "stats.json"
    source = write("h3.el", format_edge_list(h_graph(3)))
    code, out, _ = run(capsys, ["cfc", "exact", source, "--emit-witness", str(witness),
                                "--stats-json", str(stats), "--no-cited-bounds"])
    assert code == EXIT_OK and out.strip() == "3"
    assert json.loads(stats.read_text())["value"] == 3
    code, out, _ = run(capsys, ["verify-coloring", str(witness)])
    assert code == EXIT_OK


def test_exact_over_budget(capsys, write):
    code, _, err = run(capsys, ["cfc", "exact", write("s.el", format_edge_list(star(7))), "--cap", "2"])
    assert code == EXIT_FAILED
    assert "no coloring within 2 colors" in err


def test_verify_h3(capsys, write, tmp_path):
    cert = tmp_path / "cert.json"
    source = write("h3.cel", format_colored_edge_list(color_H(3)))
    code, out, _ = run(capsys, ["verify-coloring", source, "--certificate-json", str(cert)])
    assert code == EXIT_OK
    assert "conflict-free connected: yes" in out
    assert "certificate pairs: 21" in out
    assert json.loads(cert.read_text())["status"] == "pass"


def test_verify_failure(capsys, write):
    source = write("bad.cel", format_colored_edge_list(EdgeColoring(path(3), (1, 1, 1))))
    code, out, _ = run(capsys, ["verify-coloring", source])
    assert code == EXIT_FAILED
    assert "conflict-free connected: no" in out
    assert "failing pair: 0 2" in out


def test_gen_then_exact_through_stdin(capsys, monkeypatch):
    code, generated, _ = run(capsys, ["gen", "path", "--edges", "7"])
    assert code == EXIT_OK
    assert parse_graph(generated) == path(7)
    monkeypatch.setattr("sys.stdin", io.StringIO(generated))
    code, out, _ = run(capsys, ["cfc", "exact", "-"])
    assert code == EXIT_OK and out.strip() == "3"


def test_gen_graph6_and_alpha(capsys, write):
    code, generated, _ = run(capsys, ["gen", "H", "--k", "3", "--graph-format", "g6"])
    assert code == EXIT_OK
    assert generated == format_graph6(h_graph(3))
    code, out, _ = run(capsys, ["--input-format", "g6", "alpha", write("h3.g6", generated)])
    assert code == EXIT_OK
    assert out.splitlines() == ["4", "witness: 0 4 5 6"]


def test_seeded_generation_is_reproducible(capsys):
    _, first, _ = run(capsys, ["--seed", "9", "gen", "random_tree", "--n", "12"])
    _, second, _ = run(capsys, ["gen", "random_tree", "--n", "12", "--seed", "9"])
    assert first == second


def test_construct_methods(capsys, write, tmp_path):
    code, out, _ = run(capsys, ["cfc", "construct", "--method", "hk", "--k", "3"])
    assert code == EXIT_OK
    assert out == format_colored_edge_list(color_H(3))

    code, out, _ = run(capsys, ["cfc", "construct", "--method", "path", "--edges", "7"])
    assert [line.split()[2] for line in out.splitlines()[1:]] == ["1", "2", "1", "3", "1", "2", "1"]

    trace = tmp_path / "trace.json"
    tree = write("t.el", format_edge_list(star(5)))
    code, out, _ = run(capsys, ["cfc", "construct", "--method", "theorem2", tree,
                                "--trace-json", str(trace)])
    assert code == EXIT_OK
    assert json.loads(trace.read_text())["palette"] == 4


def test_bounds(capsys, write):
    code, out, _ = run(capsys, ["cfc", "bounds", write("s.el", format_edge_list(star(5)))])
    assert code == EXIT_OK
    assert "lower bound: 4" in out
    assert "alpha: 4" in out
    assert "2*Delta >= alpha + 2: holds" in out


def test_enum(capsys, tmp_path):
    target = tmp_path / "trees"
    code, out, _ = run(capsys, ["enum", "trees", "5", "-o", str(target)])
    assert code == EXIT_OK and out.strip() == "3"
    assert len(list(target.glob("*.el"))) == 3


def test_harness_run(capsys, tmp_path):
    report = tmp_path / "report.txt"
    code, _, _ = run(capsys, ["--threads", "1", "harness", "run", "--check", "lemma6",
                              "--format", "text", "-o", str(report)])
    assert code == EXIT_OK
    assert report.read_text().startswith("PASS lemma6")


@pytest.mark.parametrize("argv", [
    [],
    ["cfc"],
    ["bogus"],
    ["cfc", "construct", "--method", "hk"],
    ["cfc", "construct", "--method", "theorem1"],
    ["harness", "run", "--check", "lemma99"],
    ["--threads", "many", "alpha", "-"],
])
def test_usage_errors(capsys, argv):
    code, _, _ = run(capsys, argv)
    assert code == EXIT_USAGE


def test_input_errors(capsys, write, tmp_path):
    code, _, err = run(capsys, ["alpha", write("loop.el", "2 1\n1 1\n")])
    assert code == EXIT_INPUT
    assert "LoopEdge" in err
    code, _, _ = run(capsys, ["alpha", str(tmp_path / "missing.el")])
    assert code == EXIT_INPUT
    code, _, _ = run(capsys, ["gen", "H", "--k", "2"])
    assert code == EXIT_INPUT
    code, _, _ = run(capsys, ["harness", "run", "--max-n-graphs", "7"])
    assert code == EXIT_INPUT


def test_thread_count_resolution(monkeypatch):
    monkeypatch.delenv("CFC_LAB_THREADS", raising=False)
    cores = os.cpu_count() or 1
    assert resolve_threads(None) == cores
    assert resolve_threads(0) == cores
    assert resolve_threads(1) == 1
    assert resolve_threads(3) == 3
    assert _config_from(build_parser().parse_args(["alpha", "-"])).threads == cores
    assert _config_from(build_parser().parse_args(["--threads", "1", "alpha", "-"])).threads == 1

    monkeypatch.setenv("CFC_LAB_THREADS", "2")
    assert resolve_threads(None) is None
    assert _config_from(build_parser().parse_args(["alpha", "-"])).threads == 2
    assert _config_from(build_parser().parse_args(["--threads", "5", "alpha", "-"])).threads == 5
