"""Smoke tests for the python module (and the CLI when available)."""

import json
import math
import os
import subprocess

import pytest

import blobtree


def dist(p, q):
    return math.hypot(p[0] - q[0], p[1] - q[1])


def test_two_points():
    pts = [(0.0, 0.0), (3.0, 4.01)]
    res = blobtree.solve(pts)
    assert res["blobs"] == []
    assert res["tree_edges"] == [(0, 1)] or res["tree_edges"] == [(1, 0)]
    assert res["cost"] == pytest.approx(dist(*pts))


def test_triangle_is_mst():
    pts = [(0.0, 0.0), (4.0, 0.01), (0.02, 3.0)]
    res = blobtree.solve(pts)
    mst = blobtree.mst(pts)
    assert res["cost"] == pytest.approx(mst["weight"], rel=1e-12)
    assert res["blobs"] == []


def test_matches_partition_oracle():
    for seed in range(12):
        pts = blobtree.generate("uniform", 8, seed)
        res = blobtree.solve(pts)
        oracle = blobtree.partition_oracle(pts)
        assert res["cost"] == pytest.approx(oracle["cost"], rel=1e-9)


def test_cluster_forms_blob_and_validates():
    pts = blobtree.generate("cluster", 21, 11)
    res = blobtree.solve(pts)
    assert len(res["blobs"]) == 1
    assert len(res["tree_edges"]) == 1
    violations = blobtree.validate(
        pts, res["blobs"], res["tree_edges"], res["cost"]
    )
    assert violations == []
    oracle = blobtree.mst_subset_oracle(pts)
    assert res["cost"] == pytest.approx(oracle["cost"], rel=1e-9)


def test_generate_deterministic():
    assert blobtree.generate("grid", 16, 3) == blobtree.generate("grid", 16, 3)
    with pytest.raises(ValueError):
        blobtree.generate("nope", 4, 0)


def test_jitter_rescues_degenerate_input():
    grid = [(float(i), float(j)) for i in range(3) for j in range(3)]
    with pytest.raises(RuntimeError):
        blobtree.solve(grid)
    res = blobtree.solve(grid, jitter=0.0, seed=1)
    assert res["cost"] > 0


def test_svg():
    svg = blobtree.render_svg(blobtree.generate("cluster", 15, 3))
    assert svg.startswith("<svg")
    assert "#1f6feb" in svg


@pytest.mark.skipif("BLOBTREE_CLI" not in os.environ, reason="CLI not built")
def test_cli_agrees_with_module(tmp_path):
    cli = os.environ["BLOBTREE_CLI"]
    inst = tmp_path / "inst.txt"
    gen = subprocess.run(
        [cli, "generate", "--kind", "uniform", "--n", "12", "--seed", "4",
         "--out", str(inst)],
        capture_output=True, text=True)
    assert gen.returncode == 0
    out = subprocess.run([cli, "solve", str(inst)], capture_output=True,
                         text=True)
    assert out.returncode == 0
    rec = json.loads(out.stdout)
    pts = blobtree.generate("uniform", 12, 4)
    assert rec["cost"] == pytest.approx(blobtree.solve(pts)["cost"])
    cmp = subprocess.run([cli, "compare", str(inst), "--oracle", "subset"],
                         capture_output=True, text=True)
    assert cmp.returncode == 0
