from __future__ import annotations

import json

import pytest

from dimerpf.cli import main
from dimerpf.corpus import grid
from dimerpf.serialize import graph_to_json


def run(capsys, *argv):
    code = main(list(argv))
    return code, json.loads(capsys.readouterr().out)


@pytest.fixture
def square_file(tmp_path):
    p = tmp_path / "square.json"
    p.write_text(json.dumps(graph_to_json(grid(2, 2))))
    return str(p)


@pytest.fixture
def strip_file(tmp_path):
    p = tmp_path / "strip.json"
    p.write_text(json.dumps(graph_to_json(grid(2, 4))))
    return str(p)


def test_boundary_partition(capsys, square_file):
    code, out = run(capsys, "boundary-partition", "--graph", square_file, "--var", "z")
    assert code == 0
    assert out["polynomial"] == {"4": "1", "2": "4", "0": "2"}
    code, out = run(capsys, "boundary-partition", "--graph", square_file, "--method", "bijection")
    assert out["polynomial"] == {"2": "1", "1": "4", "0": "2"}


def test_full_partition_methods(capsys, strip_file):
    results = []
    for method in ("inout", "oracle"):
        code, out = run(capsys, "full-partition", "--graph", strip_file, "--method", method)
        assert code == 0
        results.append(out["polynomial"])
    assert results[0] == results[1]


def test_full_partition_rect(capsys):
    code, out = run(capsys, "--timing", "full-partition", "--rect", "4x3", "--method", "skeleton")
    assert code == 0
    assert out["pfaffians"] == 2
    assert out["polynomial"]["0"] == "11"
    assert "seconds" in out


def test_full_partition_with_skeleton_file(capsys, tmp_path):
    g = grid(3, 4)
    gp = tmp_path / "g.json"
    gp.write_text(json.dumps(graph_to_json(g)))
    sp = tmp_path / "s.json"
    sp.write_text(json.dumps({"removed": [{"u": 1, "v": 2}]}))
    code, out = run(capsys, "full-partition", "--graph", str(gp), "--method", "skeleton", "--skeleton", str(sp))
    assert code == 0
    _, ref = run(capsys, "full-partition", "--graph", str(gp), "--method", "oracle")
    assert out["polynomial"] == ref["polynomial"]


def test_correlations(capsys, strip_file):
    code, ratio = run(capsys, "correlations", "--graph", strip_file, "--indices", "0,1,2,3")
    assert code == 0
    _, wick = run(capsys, "correlations", "--graph", strip_file, "--indices", "0,1,2,3", "--method", "wick")
    assert ratio["value"] == wick["value"]
    assert len(ratio["labels"]) == 4


def test_orient(capsys, strip_file):
    code, out = run(capsys, "orient", "--graph", strip_file)
    assert code == 0
    assert out["kasteleyn_verified"] and out["positivity_verified"]
    assert len(out["boundary"]) == 8


def test_check(capsys, strip_file):
    code, out = run(capsys, "check", "--graph", strip_file, "--against-oracle")
    assert code == 0
    assert out["bijection_match"] and out["oracle_match"]


def test_fixtures_command(capsys):
    code, out = run(capsys, "fixtures")
    assert code == 0 and out["all_pass"]


def test_input_errors(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, out = run(capsys, "boundary-partition", "--graph", str(bad))
    assert code == 2 and out["error"] == "InputError"
    code, out = run(capsys, "boundary-partition", "--graph", str(tmp_path / "missing.json"))
    assert code == 2
    crossing = tmp_path / "x.json"
    crossing.write_text(json.dumps({
        "vertices": [{"id": 0, "pos": [0, 0]}, {"id": 1, "pos": [1, 1]}, {"id": 2, "pos": [0, 1]}, {"id": 3, "pos": [1, 0]}],
        "edges": [{"u": 0, "v": 1}, {"u": 2, "v": 3}],
    }))
    code, out = run(capsys, "boundary-partition", "--graph", str(crossing))
    assert code == 2 and out["error"] == "CrossingEdges"


def test_bad_rect(capsys):
    code, out = run(capsys, "full-partition", "--rect", "5x3", "--method", "skeleton")
    assert code == 2 and out["error"] == "BadDimensions"
