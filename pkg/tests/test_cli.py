import json

import pytest

from pvc4.cli import main
from pvc4.fileformat import render
from pvc4.generators import path_graph


@pytest.fixture
def p4_file(tmp_path):
    path = tmp_path / "p4.pvc4"
    path.write_text(render(path_graph(4)))
    return str(path)


def test_solve_yes(p4_file, capsys):
    assert main(["solve", "-i", p4_file, "-k", "1"]) == 0
    out = capsys.readouterr().out
    assert "answer: yes" in out
    assert "cover:" in out


def test_solve_no(p4_file, capsys):
    assert main(["solve", "-i", p4_file, "-k", "0"]) == 1
    assert "answer: no" in capsys.readouterr().out


def test_solve_requires_k_for_graphs(p4_file, capsys):
    assert main(["solve", "-i", p4_file]) == 2
    assert "error" in capsys.readouterr().err


def test_solve_json_schema(p4_file, capsys):
    assert main(["solve", "-i", p4_file, "-k", "2", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["schema"] == 1
    assert payload["answer"] == "yes"
    assert payload["stats"]["nodes"] >= 1
    assert "rule_fires" in payload["stats"]
    assert "elapsed_sec" not in payload["stats"]  # only with --timing


def test_solve_instance_file(tmp_path, capsys):
    from pvc4 import Graph, Instance

    inst = Instance(Graph(vertices=range(4), edges=[(0, 1), (1, 2), (2, 3)]), [0, 3], 1)
    path = tmp_path / "inst.pvc4"
    path.write_text(render(inst))
    assert main(["solve", "-i", str(path), "-k", "1"]) == 0
    out = capsys.readouterr().out
    assert "cover: 2" in out
    assert main(["solve", "-i", str(path), "-k", "0"]) == 1


def test_solve_reports_are_deterministic(p4_file, capsys):
    main(["solve", "-i", p4_file, "-k", "1"])
    first = capsys.readouterr().out
    main(["solve", "-i", p4_file, "-k", "1"])
    assert capsys.readouterr().out == first


def test_trace_emits_node_lines(p4_file, capsys):
    main(["solve", "-i", p4_file, "-k", "1", "--trace"])
    err = capsys.readouterr().err
    lines = [json.loads(line) for line in err.splitlines()]
    assert lines and all("rule" in line and "depth" in line for line in lines)


def test_minimize(p4_file, capsys):
    assert main(["minimize", "-i", p4_file]) == 0
    assert "minimum: 1" in capsys.readouterr().out


def test_minimize_rejects_instances(tmp_path, capsys):
    from pvc4 import Graph, Instance

    inst = Instance(Graph(vertices=range(2), edges=[(0, 1)]), [0], 1)
    path = tmp_path / "inst.pvc4"
    path.write_text(render(inst))
    assert main(["minimize", "-i", str(path)]) == 2


def test_verify(p4_file, capsys):
    assert main(["verify", "-i", p4_file, "--cover", "2"]) == 0
    assert main(["verify", "-i", p4_file, "--cover", ""]) == 1
    assert main(["verify", "-i", p4_file, "--cover", "9"]) == 2
    assert main(["verify", "-i", p4_file, "--cover", "x"]) == 2


def test_gen_roundtrip(tmp_path, capsys):
    out = tmp_path / "g.pvc4"
    assert main(["gen", "--model", "gnp", "--n", "10", "--p", "0.3", "--seed", "7", "-o", str(out)]) == 0
    text = out.read_text()
    assert text.startswith("c generator: model=gnp")
    from pvc4.fileformat import parse
    from pvc4.generators import gnp

    assert parse(text) == gnp(10, 0.3, 7)


def test_gen_rule_trigger(tmp_path):
    out = tmp_path / "t.pvc4"
    assert main(["gen", "--model", "rule_trigger", "--rule", "12", "--seed", "3", "-o", str(out)]) == 0
    from pvc4 import select_rule
    from pvc4.fileformat import parse

    inst = parse(out.read_text())
    assert select_rule(inst)[0].rule_id == 12


def test_gen_missing_params(capsys):
    assert main(["gen", "--model", "gnp", "--n", "5"]) == 2


def test_malformed_file(tmp_path, capsys):
    bad = tmp_path / "bad.pvc4"
    bad.write_text("p pvc4 2 1\ne 1 1\n")
    assert main(["solve", "-i", str(bad), "-k", "1"]) == 2
    assert "line 2" in capsys.readouterr().err


def test_missing_file(capsys):
    assert main(["solve", "-i", "/nonexistent.pvc4", "-k", "1"]) == 2


def test_node_cap_flag(tmp_path, capsys):
    from pvc4.generators import gnp

    path = tmp_path / "g.pvc4"
    path.write_text(render(gnp(20, 0.2, 1)))
    assert main(["solve", "-i", str(path), "-k", "6", "--node-cap", "3"]) == 2


def test_node_cap_env(tmp_path, capsys, monkeypatch):
    path = tmp_path / "g.pvc4"
    path.write_text(render(path_graph(8)))
    monkeypatch.setenv("PVC4_NODE_CAP", "1")
    assert main(["solve", "-i", str(path), "-k", "0"]) == 2


def test_bench_runs(capsys):
    assert main(["bench", "--n", "16", "--p", "0.2", "--count", "2", "--kmax", "6", "--seed", "1"]) == 0
    out = capsys.readouterr().out
    assert "fitted growth base" in out
    assert "leaf bound violations: 0" in out


def test_selftest_runs(capsys):
    assert main(["selftest", "--max-n", "3", "--instances", "4"]) == 0
    out = capsys.readouterr().out
    assert "0 mismatches" in out
    assert "0 violations" in out
