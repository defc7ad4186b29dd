"""End-to-end smoke tests for the python bindings and the CLI."""

import json
import os
import pathlib
import subprocess

import pytest

import chainlat

DATA = pathlib.Path(os.environ["CHAINLAT_DATA"])
CLI = os.environ.get("CHAINLAT_CLI")


def load(name):
    return chainlat.parse_poset((DATA / name).read_text())


def test_poset_basics():
    p = load("fig1.poset")
    assert p.size == 4
    assert p.width() == 2
    assert p.chain_decomposition() == [["a", "c"], ["b", "d"]]
    assert p.linear_extension_count() == 5


def test_parse_error():
    with pytest.raises(ValueError):
        chainlat.parse_poset("elements a b\ncover a b\ncover b a\n")


def test_worked_example_dimension():
    lattice = chainlat.birkhoff(load("fig1.poset"))
    assert lattice.size == 8
    assert lattice.planar
    assert chainlat.krull_dimension(lattice) == (4, 4, 4)
    chains = chainlat.maximal_chains(lattice)
    assert sorted("".join(c) for c in chains) == [
        "t1t3t5",
        "t1t3t6",
        "t2t3t5",
        "t2t3t6",
        "t2t4t6",
    ]


def test_sortable_report():
    rep = chainlat.sortable_report(chainlat.birkhoff(load("fig1.poset")))
    assert rep["sortable"] is True
    assert len(rep["relations"]) == 1

    cube = chainlat.sortable_report(chainlat.birkhoff(chainlat.Poset.antichain(3)))
    assert cube["sortable"] is False
    assert "witness" in cube


def test_hilbert_report():
    rep = chainlat.hilbert_report(chainlat.birkhoff(load("fig2.poset")), oracle=2)
    assert rep["h"] == [1, 18, 65, 65, 18, 1]
    assert rep["denom_power"] == 9
    assert rep["gorenstein"] is True
    assert rep["oracle"]["1"]["series"] == 27
    assert rep["oracle"]["2"]["series"] == rep["oracle"]["2"]["paths"] == 272


def test_toric_report():
    rep = chainlat.toric_report(chainlat.birkhoff(chainlat.Poset.antichain(3)), max_degree=4)
    assert rep["degrees"] == {"3": 1}
    assert rep["quadratic"] is False
    assert rep["truncated"] is True


def test_cycle_witness():
    rep = chainlat.cycle_witness_report(chainlat.birkhoff(chainlat.Poset.antichain(4)))
    assert rep["degree"] == 4
    assert rep["in_kernel"] is True
    assert rep["minimal"] is True


def test_hibi_sorting():
    assert chainlat.verify_hibi_sorting(load("fig1.poset"))
    assert chainlat.verify_hibi_sorting(chainlat.Poset.antichain(3))


def test_corpus_small():
    rep = chainlat.corpus_report(max_size=3)
    assert rep["posets"] == 8
    assert rep["pass"] is True


@pytest.mark.skipif(CLI is None, reason="CLI path not provided")
def test_cli_json_and_determinism():
    cmd = [CLI, "chains", str(DATA / "fig1.poset"), "--format", "json"]
    first = subprocess.run(cmd, capture_output=True, text=True, check=True)
    second = subprocess.run(cmd, capture_output=True, text=True, check=True)
    assert first.stdout == second.stdout
    rep = json.loads(first.stdout)
    assert rep["dim"] == 4
    assert rep["components"] == 5
    assert len(rep["chains"]) == 5


@pytest.mark.skipif(CLI is None, reason="CLI path not provided")
def test_cli_exit_codes():
    bad = subprocess.run([CLI, "dim", str(DATA / "missing.poset")], capture_output=True)
    assert bad.returncode == 1
    # an over-tight budget exhausts with exit code 2
    env = dict(os.environ, CHAINLAT_BUDGET_MAX_IDEALS="4")
    budget = subprocess.run(
        [CLI, "dim", str(DATA / "fig2.poset")], capture_output=True, env=env
    )
    assert budget.returncode == 2


def test_graded_dimensions_nonplanar():
    cube = chainlat.birkhoff(chainlat.Poset.antichain(3))
    # six chains, and all 21 degree-two products are distinct
    assert chainlat.graded_dimensions(cube, max_degree=2) == [1, 6, 21]
    with pytest.raises(ValueError):
        chainlat.hilbert_report(cube)
