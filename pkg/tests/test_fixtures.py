from __future__ import annotations

import os

import pytest

from graphreal import fixtures
from graphreal.codes import minimum_distance
from graphreal.graphs import cycle_graph
from graphreal.guards import GUARD_ENV_VAR, GuardExceeded, guard_bits
from graphreal.lower_bounds import vctree_lower_bound
from graphreal.min_tree import kappa_of_path_ordering, kappa_path_exact
from graphreal.realizations import GraphDecomposition
from graphreal.vctrees import (
    GraphTreeDecomposition,
    VertexCutTree,
    cycle_vcpath,
    validate_tree_decomposition,
    validate_vctree,
    vc_pathwidth_exact,
    vc_treewidth_exact,
)


def test_catalog_names():
    names = [f.name for f in fixtures.CATALOG]
    assert "appendix-11-3-3" in names
    assert "golay-24-12-8" in names
    assert "even-weight-3-2" in names
    with pytest.raises(KeyError):
        fixtures.get_fixture("nope")


def test_appendix_expected_values_reproduce():
    bundle = fixtures.get_fixture("appendix-11-3-3").build()
    code = bundle["code"]
    expected = bundle["expected"]
    assert code.n == expected["n"] and code.dim == expected["k"]
    assert minimum_distance(code) == expected["d"]
    decomp = GraphDecomposition(bundle["graph"], code.index_set, bundle["omega"])
    vct = VertexCutTree(bundle["vctree"]["tree"], bundle["vctree"]["bags"], bundle["graph"])
    assert validate_vctree(vct).ok
    cert = vctree_lower_bound(code, decomp, vct)
    assert cert.bound == expected["theorem_bound"]


def test_golay_expected_values_reproduce():
    bundle = fixtures.get_fixture("golay-24-12-8").build()
    code = bundle["code"]
    expected = bundle["expected"]
    assert code.n == expected["n"] and code.dim == expected["k"]
    assert minimum_distance(code) == expected["d"]
    assert kappa_of_path_ordering(code, bundle["path_ordering"]) == expected["kappa_path"]


def test_even_weight_expected_values_reproduce():
    bundle = fixtures.get_fixture("even-weight-3-2").build()
    code = bundle["code"]
    expected = bundle["expected"]
    assert code.n == expected["n"] and code.dim == expected["k"]
    assert minimum_distance(code) == expected["d"]
    assert kappa_path_exact(code)[0] == expected["kappa_path"]


def test_fig3_expected_values_reproduce():
    bundle = fixtures.get_fixture("fig3-8-vertex").build()
    g = bundle["graph"]
    expected = bundle["expected"]
    assert vc_treewidth_exact(g).value == expected["vc_treewidth"]
    assert vc_pathwidth_exact(g).value == expected["vc_pathwidth"]
    tree = bundle["tree_decomposition"]["tree"]
    bags = bundle["tree_decomposition"]["bags"]
    td = GraphTreeDecomposition(tree, bags, g)
    assert validate_tree_decomposition(td).ok
    assert td.width() == expected["td_width"]


def test_theorem_bound_golay_on_cycle():
    code = fixtures.golay_code()
    g = cycle_graph([f"v{i}" for i in range(24)])
    omega = {str(i): f"v{i - 1}" for i in range(1, 25)}
    decomp = GraphDecomposition(g, code.index_set, omega)
    cert = vctree_lower_bound(code, decomp, cycle_vcpath(g))
    # The induced decomposition is a path decomposition of the code, so
    # its complexity is at least the optimal path complexity 9.
    assert cert.induced_complexity >= 9
    assert cert.bound >= 5


def test_guard_env_override(monkeypatch):
    monkeypatch.delenv(GUARD_ENV_VAR, raising=False)
    assert guard_bits() == 24
    monkeypatch.setenv(GUARD_ENV_VAR, "10")
    assert guard_bits() == 10
    code = fixtures.golay_code()  # 2**12 codewords exceed a 10-bit budget
    with pytest.raises(GuardExceeded):
        minimum_distance(code)
    monkeypatch.setenv(GUARD_ENV_VAR, "not-a-number")
    with pytest.raises(ValueError):
        guard_bits()
    monkeypatch.delenv(GUARD_ENV_VAR)
    assert minimum_distance(code) == 8
