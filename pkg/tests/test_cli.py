import json
import subprocess
import sys

import pytest

from artinkit.cli import main


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def g(graphs_dir, name):
    return graphs_dir / f"{name}.json"


def test_graph_check(capsys, graphs_dir, tmp_path):
    code, out, _ = run(capsys, "graph-check", g(graphs_dir, "A2"), "--small-type")
    assert (code, out.strip()) == (0, "true")
    code, out, _ = run(capsys, "graph-check", g(graphs_dir, "triangle"), "--no-triangle")
    assert (code, out.strip()) == (1, "false")
    bad = tmp_path / "bad.json"
    bad.write_text("{nope")
    code, _, err = run(capsys, "graph-check", bad)
    assert code == 2 and "error" in err
    code, out, _ = run(capsys, "graph-check", g(graphs_dir, "A3_affine"), "--json")
    assert code == 0 and json.loads(out) == {"small_type": True, "no_triangle": True, "spherical": False}
    code, out, _ = run(capsys, "graph-check", g(graphs_dir, "A3_affine"), "--spherical", "--subset", "1,2,3")
    assert (code, out.strip()) == (0, "true")


def test_roots(capsys, graphs_dir):
    _, out, _ = run(capsys, "roots", g(graphs_dir, "A2"), "--max-depth", 2)
    assert len(out.strip().splitlines()) == 3
    _, out, _ = run(capsys, "roots", g(graphs_dir, "A3"), "--max-depth", 3)
    assert len(out.strip().splitlines()) == 6
    code, out, _ = run(capsys, "roots", g(graphs_dir, "D4"), "--max-depth", 1, "--json")
    assert code == 0 and len(json.loads(out)) == 4
    code, _, _ = run(capsys, "roots", g(graphs_dir, "edge_m4"))
    assert code == 2


def test_tpoly(capsys, graphs_dir):
    code, out, _ = run(capsys, "tpoly", g(graphs_dir, "A2"), "--vertex", "s", "--root", '{"s": 1, "t": 1}')
    assert code == 0 and out.strip() == "T(s, a_s+a_t) = -y^2 + y^3"


@pytest.mark.parametrize("name,suite,depth", [
    ("A3", "relations", 6), ("A3_affine", "tpoly", 5), ("A2", "closed", 5),
    ("A2", "order", 4), ("A3", "inverse", 6),
])
def test_verify_passes(capsys, graphs_dir, name, suite, depth):
    code, out, _ = run(capsys, "verify", g(graphs_dir, name), "--suite", suite, "--max-depth", depth)
    assert code == 0 and "=> PASS" in out


def test_verify_json_agrees_with_text(capsys, graphs_dir):
    code, out, _ = run(capsys, "verify", g(graphs_dir, "A2"), "--suite", "relations", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["ok"] and all(c["passed"] for c in doc["checks"])


def test_verify_rejects_triangle(capsys, graphs_dir):
    code, _, _ = run(capsys, "verify", g(graphs_dir, "triangle"), "--suite", "relations")
    assert code == 2


def test_decode_and_eq(capsys, graphs_dir):
    A2 = g(graphs_dir, "A2")
    assert run(capsys, "eq", A2, "-a", "s t s", "-b", "t s t")[:2] == (0, "true\n")
    assert run(capsys, "eq", A2, "-a", "s t", "-b", "t s", "--method", "bfs")[:2] == (1, "false\n")
    code, out, _ = run(capsys, "decode", A2, "--word", "s s")
    assert code == 0 and out.strip().splitlines() == ["s", "s"]
    code, out, _ = run(capsys, "decode", A2)
    assert code == 0 and out == ""
    code, _, _ = run(capsys, "eq", g(graphs_dir, "A3"), "-a", "1 2 1 3 2 1", "-b", "3 2 1 3 2 3",
                     "--method", "bfs", "--cap", 3)
    assert code == 2


def test_lcm(capsys, graphs_dir):
    assert run(capsys, "lcm", g(graphs_dir, "edge_inf"), "-a", "s", "-b", "t")[1].strip() == "none"
    assert run(capsys, "lcm", g(graphs_dir, "edge_m5"), "-a", "s", "-b", "t")[1].strip() == "s t s t s"


def test_fold(capsys, graphs_dir, tmp_path):
    target, mapping = tmp_path / "t.json", tmp_path / "m.json"
    code, out, _ = run(capsys, "fold", g(graphs_dir, "edge_m4"), "-o", target, "--map", mapping,
                       "--check-lcm")
    assert code == 0 and "target_vertices: 12" in out
    assert len(json.loads(target.read_text())["vertices"]) == 12
    assert set(json.loads(mapping.read_text())["map"]) == {"s", "t"}
    code, out, _ = run(capsys, "fold", g(graphs_dir, "edge_inf"), "--twice", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["small_type"] and doc["no_triangle"] and doc["target_vertices"] == 16
    two = tmp_path / "two.json"
    two.write_text('{"vertices": ["s", "t"], "edges": []}')
    code, out, _ = run(capsys, "fold", two, "-o", target)
    assert code == 0 and json.loads(target.read_text())["edges"] == []
    assert len(json.loads(target.read_text())["vertices"]) == 4
    # the printed target checks out through graph-check
    code, out, _ = run(capsys, "fold", g(graphs_dir, "A2"), "--twice", "-o", target)
    assert run(capsys, "graph-check", target, "--small-type", "--no-triangle")[0] == 0


def test_usage_errors(capsys, graphs_dir):
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "verify", g(graphs_dir, "A2"))[0] == 2
    assert run(capsys, "roots", graphs_dir / "missing.json")[0] == 2


def test_module_entry_point(graphs_dir):
    res = subprocess.run([sys.executable, "-m", "artinkit", "eq", str(g(graphs_dir, "A2")),
                          "-a", "s t s", "-b", "t s t"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "true"
