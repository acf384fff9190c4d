import json
import subprocess
import sys

import pytest

from thintree.cli import main


def run_cli(args):
    code = main(args)
    assert code == 0
    return code


def test_gen_and_thin_tree(tmp_path):
    emb = tmp_path / "g.emb"
    tree = tmp_path / "tree.json"
    run_cli(["gen", "--family", "planar-amplified", "--base", "cube",
             "--mult", "12", "--seed", "0", "--out", str(emb)])
    run_cli(["thin-tree", "--in", str(emb), "--out", str(tree), "--certify"])
    payload = json.loads(tree.read_text())
    assert payload["g_star"] == 36
    assert payload["alpha"] == 5
    assert payload["thinness_bound"] == "5/18"
    assert len(payload["tree_edges"]) == 7
    assert payload["certificate_distance"] >= 4
    # certified ratio is a fraction string like "1/12"
    num, den = payload["certified_max_ratio"].split("/")
    assert int(den) >= payload["certificate_distance"] * int(num)


def test_thin_tree_certify_refuses_large(tmp_path):
    emb = tmp_path / "g.emb"
    tree = tmp_path / "tree.json"
    run_cli(["gen", "--family", "planar-amplified", "--base", "cycle",
             "--n", "30", "--mult", "1", "--seed", "0", "--out", str(emb)])
    code = main(["thin-tree", "--in", str(emb), "--out", str(tree),
                 "--certify"])
    assert code == 2


def test_surgery_cli(tmp_path):
    emb = tmp_path / "g.emb"
    out = tmp_path / "h.emb"
    log = tmp_path / "log.json"
    run_cli(["gen", "--family", "torus-grid", "--rows", "3", "--cols", "3",
             "--mult", "3", "--seed", "7", "--out", str(emb)])
    run_cli(["surgery", "--in", str(emb), "--k", "12",
             "--out", str(out), "--log", str(log)])
    lines = log.read_text().splitlines()
    summary = json.loads(lines[-1])
    assert summary["total_deleted"] == 0
    assert summary["k"] == 12
    from thintree.formats import read_emb
    h = read_emb(out.read_text())
    assert h.edge_count == 54


def test_pipeline_cli_weighted(tmp_path):
    emb = tmp_path / "g.emb"
    out = tmp_path / "result.json"
    run_cli(["gen", "--family", "planar-amplified", "--base", "cube",
             "--mult", "20", "--seed", "3", "--cost-model", "uniform-range",
             "--weighted", "--out", str(emb)])
    run_cli(["pipeline", "--in", str(emb), "--weighted", "--out", str(out)])
    payload = json.loads(out.read_text())
    assert payload["rounds"] == 3
    assert payload["thinness"] == "1/3"
    assert len(payload["connectivity_trace"]) == 3


def test_pipeline_cli_unweighted(tmp_path):
    emb = tmp_path / "g.emb"
    out = tmp_path / "result.json"
    run_cli(["gen", "--family", "torus-grid", "--rows", "3", "--cols", "3",
             "--mult", "12", "--seed", "0", "--out", str(emb)])
    run_cli(["pipeline", "--in", str(emb), "--out", str(out)])
    payload = json.loads(out.read_text())
    assert payload["genus"] == 1
    assert payload["edge_connectivity"] == 48
    assert payload["thinness_bound"] == "0.875"


def test_atsp_and_verify_cli(tmp_path):
    inst = tmp_path / "inst.atsp"
    emb = tmp_path / "support.emb"
    tour = tmp_path / "tour.json"
    run_cli(["gen", "--family", "lp-support-instance", "--n", "6",
             "--seed", "1", "--out", str(inst), "--emb-out", str(emb)])
    run_cli(["atsp", "--in", str(inst), "--emb", str(emb),
             "--denominator", "60", "--exact", "--out", str(tour)])
    payload = json.loads(tour.read_text())
    assert payload["beta"] == "10"
    assert len(payload["order"]) == 6
    run_cli(["verify", "tour", "--in", str(inst), "--tour", str(tour)])

    tree = tmp_path / "tree.json"
    g = tmp_path / "g.emb"
    run_cli(["gen", "--family", "planar-amplified", "--base", "cube",
             "--mult", "6", "--seed", "0", "--out", str(g)])
    run_cli(["thin-tree", "--in", str(g), "--out", str(tree)])
    run_cli(["verify", "thinness", "--in", str(g), "--edges", str(tree)])


@pytest.mark.parametrize("argv", [
    ["gen", "--family", "torus-grid", "--rows", "3", "--cols", "4",
     "--mult", "2", "--seed", "5", "--out", "OUT"],
    ["gen", "--family", "random-metric", "--n", "7", "--seed", "9",
     "--cost-model", "asymmetric-skew", "--out", "OUT"],
    ["gen", "--family", "planar-amplified", "--base", "prism", "--n", "5",
     "--mult", "4", "--seed", "2", "--cost-model", "uniform-range",
     "--weighted", "--out", "OUT"],
])
def test_cli_outputs_byte_identical(tmp_path, argv):
    out1 = tmp_path / "a.out"
    out2 = tmp_path / "b.out"
    run_cli([a if a != "OUT" else str(out1) for a in argv])
    run_cli([a if a != "OUT" else str(out2) for a in argv])
    assert out1.read_bytes() == out2.read_bytes()


def test_outputs_independent_of_hash_seed(tmp_path):
    import os
    outs = []
    for seed in ("1", "99"):
        out = tmp_path / f"g{seed}.emb"
        env = dict(os.environ, PYTHONHASHSEED=seed)
        proc = subprocess.run(
            [sys.executable, "-m", "thintree", "gen", "--family",
             "lp-support-instance", "--n", "8", "--seed", "2",
             "--out", str(out), "--emb-out", str(out) + ".emb"],
            capture_output=True, text=True, env=env)
        assert proc.returncode == 0, proc.stderr
        outs.append(out.read_bytes() + (tmp_path / (out.name + ".emb")).read_bytes())
    assert outs[0] == outs[1]


def test_module_entrypoint_runs(tmp_path):
    out = tmp_path / "g.emb"
    proc = subprocess.run(
        [sys.executable, "-m", "thintree", "gen", "--family", "torus-grid",
         "--rows", "3", "--cols", "3", "--mult", "1", "--seed", "0",
         "--out", str(out)],
        capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    assert out.read_text().startswith("EMB 1 9 18")
