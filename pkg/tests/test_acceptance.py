"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with `pytest tests/test_acceptance.py -s` to see the per-criterion
lines.  Exact arithmetic everywhere: equalities are exact, no numeric
tolerances.
"""

from __future__ import annotations

import itertools
import random
import time
from fractions import Fraction


from conftest import random_code
from graphreal import fixtures
from graphreal.codes import minimum_distance
from graphreal.cut_bounds import (
    disconnecting_subsets,
    edge_cut_rhs,
    lp_kappa_plus_lower_bound,
    star_tree_model,
    vertex_cut_rhs,
)
from graphreal.graphs import (
    cycle_graph,
    delete_edges,
    make_graph,
    path_graph,
    star_partition_from_cut,
)
from graphreal.lower_bounds import (
    corollary_bounds,
    induced_code_decomposition,
    nkd_tree_complexity_bound,
    node_bounds,
    vctree_lower_bound,
)
from graphreal.min_tree import (
    build_minimal,
    build_row_span,
    dim_constraint,
    dim_state,
    extend_via_spanning_tree,
    kappa_of_path_ordering,
    path_decomposition,
)
from graphreal.realizations import (
    GraphDecomposition,
    build_star,
    measure,
    verify_realization,
)
from graphreal.vctrees import (
    VertexCutTree,
    cycle_vcpath,
    td_as_vctree,
    validate_tree_decomposition,
    validate_vctree,
    vc_pathwidth_exact,
    vc_treewidth_exact,
    vc_width,
)
from test_min_tree import oracle_dims, random_tree_decomposition
from test_vctrees import random_connected_graph, random_tree_decomposition_of


def report(criterion: int, elapsed: float, detail: str) -> None:
    print(f"ACCEPTANCE {criterion}: PASS ({elapsed:.2f}s) {detail}")


def test_criterion_1_appendix_identity():
    start = time.monotonic()
    code = fixtures.appendix_code()
    assert code.n == 11
    assert code.dim == 3
    assert minimum_distance(code) == 3
    elapsed = time.monotonic() - start
    assert elapsed < 1.0
    report(1, elapsed, "[11,3,3] fixture has n=11, k=3, d=3")


def test_criterion_2_cycle_vc_treewidth():
    start = time.monotonic()
    for n in range(3, 9):
        result = vc_treewidth_exact(cycle_graph([f"v{i}" for i in range(n)]))
        assert result.value == 2, f"{n}-cycle"
        assert validate_vctree(result.witness).ok
        assert vc_width(result.witness) == 2
    rng = random.Random(2024)
    for _ in range(20):
        size = rng.randint(1, 8)
        names = [f"v{i}" for i in range(size)]
        edges = [(names[rng.randrange(i)], names[i]) for i in range(1, size)]
        tree = make_graph(names, edges)
        result = vc_treewidth_exact(tree)
        assert result.value == 1
        assert validate_vctree(result.witness).ok
    elapsed = time.monotonic() - start
    assert elapsed < 30.0
    report(2, elapsed, "cycles 3..8 give vc-treewidth 2; 20 random trees give 1")


def test_criterion_3_eight_vertex_fixture():
    start = time.monotonic()
    g = fixtures.fig3_graph()
    tree_result = vc_treewidth_exact(g)
    assert tree_result.value == 3
    assert validate_vctree(tree_result.witness).ok
    path_result = vc_pathwidth_exact(g)
    assert path_result.value == 3
    elapsed = time.monotonic() - start
    assert elapsed < 120.0
    report(3, elapsed, "8-vertex fixture: vc-treewidth = vc-pathwidth = 3 (searched family)")


def _criterion_4_cases():
    rng = random.Random(40424)
    for _ in range(200):
        q = rng.choice([2, 3])
        n = rng.randint(1, 9)
        dim_target = rng.randint(0, min(5, n))
        code = random_code(rng, n, dim_target, q)
        td = random_tree_decomposition(rng, code)
        yield code, td


_CRITERION_4_MODELS = []


def test_criterion_4_minimal_formula_equivalence():
    start = time.monotonic()
    checked = 0
    for code, td in _criterion_4_cases():
        model = build_minimal(code, td)
        edge_oracle, vertex_oracle = oracle_dims(code, td)
        for e in td.graph.edges:
            built = model.state_spaces[e].dim
            assert built == dim_state(code, td, e) == edge_oracle[e]
        for v in td.graph.vertices:
            built = model.constraints[v].dim
            assert built == dim_constraint(code, td, v) == vertex_oracle[v]
        _CRITERION_4_MODELS.append((code, model))
        checked += 1
    assert checked == 200
    elapsed = time.monotonic() - start
    assert elapsed < 120.0
    report(4, elapsed, "200 random minimal realizations match formulas and enumeration oracle")


def test_criterion_5_kappa_plus_identity():
    start = time.monotonic()
    assert _CRITERION_4_MODELS, "criterion 4 must run first"
    for code, model in _CRITERION_4_MODELS:
        rep = measure(model)
        assert rep.kappa_plus == code.dim + rep.sigma_plus
    elapsed = time.monotonic() - start
    report(5, elapsed, f"kappa_plus = dim + sigma_plus on all {len(_CRITERION_4_MODELS)} models")


def _criterion_6_graphs():
    yield path_graph(["v0", "v1"])
    yield path_graph(["v0", "v1", "v2", "v3"])
    yield cycle_graph(["v0", "v1", "v2"])
    yield cycle_graph(["v0", "v1", "v2", "v3", "v4"])
    yield cycle_graph(["v0", "v1", "v2", "v3", "v4", "v5"])
    yield make_graph(
        "abcd", [("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d")]
    )
    yield make_graph("abcde", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("a", "e"), ("b", "e")])
    yield make_graph("abcdef", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "f"), ("a", "f"), ("c", "f")])


def _soundness_check(code, decomp, model):
    g = decomp.graph
    vertices = sorted(g.vertices)
    violations = 0
    for size in range(1, len(vertices) + 1):
        for W in itertools.combinations(vertices, size):
            sp = star_partition_from_cut(g, frozenset(W))
            rhs = vertex_cut_rhs(code, decomp, sp).rhs
            lhs = sum(model.constraints[v].dim for v in W)
            if lhs < rhs:
                violations += 1
    edges = sorted(g.edges)
    for size in range(1, len(edges) + 1):
        for X in itertools.combinations(edges, size):
            _, comps = delete_edges(g, X)
            if len(comps) < 2:
                continue
            lhs = sum(model.state_spaces[e].dim for e in X)
            for r in range(1, len(comps)):
                for side in itertools.combinations(range(len(comps)), r):
                    va = frozenset().union(*(comps[i] for i in side))
                    vb = g.vertices - va
                    rhs = edge_cut_rhs(code, decomp, (va, vb), X).rhs
                    if lhs < rhs:
                        violations += 1
    return violations


def test_criterion_6_cut_bound_soundness():
    start = time.monotonic()
    rng = random.Random(606)
    cases = 0
    violations = 0
    for g in _criterion_6_graphs():
        vertices = sorted(g.vertices)
        for trial in range(6):
            q = rng.choice([2, 3])
            code = random_code(rng, rng.randint(2, 6), rng.randint(1, 3), q)
            omega = {lbl: rng.choice(vertices) for lbl in code.index_set}
            decomp = GraphDecomposition(g, code.index_set, omega)
            model = extend_via_spanning_tree(code, decomp)
            assert verify_realization(model, code).ok
            violations += _soundness_check(code, decomp, model)
            cases += 1
            if g.is_tree():
                alt = build_row_span(code, decomp)
                violations += _soundness_check(code, decomp, alt)
                cases += 1
    # Star realizations and their star-tree collapses on small codes.
    for trial in range(30):
        code = random_code(rng, rng.randint(2, 5), rng.randint(1, 3), 2)
        model = build_star(code)
        decomp = model.decomposition
        violations += _soundness_check(code, decomp, model)
        cases += 1
        g = decomp.graph
        W = frozenset({"hub"})
        collapsed = star_tree_model(model, star_partition_from_cut(g, W))
        cdecomp = collapsed.decomposition
        violations += _soundness_check(code, cdecomp, collapsed)
        cases += 1
    assert cases >= 100
    assert violations == 0
    elapsed = time.monotonic() - start
    assert elapsed < 300.0
    report(6, elapsed, f"{cases} realizations, every cut inequality holds (0 violations)")


def test_criterion_7_pipeline_on_appendix():
    start = time.monotonic()
    code = fixtures.appendix_code()
    decomp = GraphDecomposition(fixtures.appendix_graph(), code.index_set, fixtures.appendix_omega())
    vct = cycle_vcpath(decomp.graph)
    nb = node_bounds(code, decomp, vct)
    assert nb.max_value == 3
    cert = vctree_lower_bound(code, decomp, vct)
    assert cert.induced_complexity == nb.max_value == 3
    assert cert.bound == 2  # matches the realization of complexity 2

    # Worked index-mapping example on the 8-vertex fixture.
    bundle = fixtures.get_fixture("fig3-8-vertex").build()
    tree, bags = fixtures.fig3_tree_decomposition_data()
    vct8 = VertexCutTree(tree, bags, bundle["graph"])
    assert validate_vctree(vct8).ok
    decomp8 = GraphDecomposition(bundle["graph"], bundle["code"].index_set, bundle["omega"])
    gamma = induced_code_decomposition(bundle["code"], decomp8, vct8, "z*")
    expected = {
        "1": "A", "2": "A",
        "3": "z*", "4": "z*", "5": "z*", "6": "z*", "7": "z*",
        "8": "F",
        "9": "H", "10": "H",
    }
    assert dict(gamma.omega) == expected
    elapsed = time.monotonic() - start
    report(7, elapsed, "max node bound 3, induced complexity 3, theorem bound 2; worked mapping reproduced")


def test_criterion_8_golay_chain():
    start = time.monotonic()
    code = fixtures.golay_code()
    ordering = fixtures.GOLAY_PATH_ORDERING
    assert sorted(ordering) == sorted(code.index_set)
    td = path_decomposition(code, ordering)
    model = build_minimal(code, td)
    rep = measure(model)
    assert rep.kappa == 9
    assert kappa_of_path_ordering(code, ordering) == 9

    g24 = cycle_graph([f"v{i}" for i in range(24)])
    result = corollary_bounds(
        None,
        g24,
        kappa_path=9,
        kappa_provenance="achieved by the fixture ordering; optimality is a known result",
        vc_path=cycle_vcpath(g24),
        vc_tree=cycle_vcpath(g24),
    )
    assert result.path_bound == 5
    assert result.best >= 5
    elapsed = time.monotonic() - start
    assert elapsed < 60.0
    report(8, elapsed, "Golay path realization reaches 9; cycle corollary gives bound 5")


def test_criterion_9_lp_bound():
    start = time.monotonic()
    code = fixtures.appendix_code()
    decomp = GraphDecomposition(fixtures.appendix_graph(), code.index_set, fixtures.appendix_omega())
    cuts = disconnecting_subsets(decomp.graph, max_size=2, include_full=False)
    value = lp_kappa_plus_lower_bound(code, decomp, cuts)
    assert isinstance(value, Fraction)
    assert 0 < value <= 13
    # Monotonicity: growing the cut family never lowers the bound.
    previous = Fraction(0)
    for take in range(0, len(cuts) + 1, max(1, len(cuts) // 6)):
        sub_value = lp_kappa_plus_lower_bound(code, decomp, cuts[:take])
        assert sub_value >= previous
        previous = sub_value
    assert lp_kappa_plus_lower_bound(code, decomp, cuts) >= previous
    elapsed = time.monotonic() - start
    report(9, elapsed, f"LP value {value} is rational, in (0, 13], monotone in the cut family")


def test_criterion_10_nkd_bound():
    start = time.monotonic()
    rep = nkd_tree_complexity_bound(24, 12, 8)
    assert rep.tree_bound_int == 1
    assert rep.log2_low <= rep.log2_high
    assert rep.path_bound == Fraction(84, 24)
    assert rep.path_bound_int == 4
    assert rep.path_bound_int <= 9
    elapsed = time.monotonic() - start
    report(10, elapsed, "certified tree bound 1 and path bound 4 for [24,12,8]")


def test_criterion_11_tree_decompositions_are_vctrees():
    start = time.monotonic()
    rng = random.Random(1111)
    checked = 0
    for _ in range(100):
        g = random_connected_graph(rng, rng.randint(2, 8))
        td = random_tree_decomposition_of(rng, g)
        assert validate_tree_decomposition(td).ok
        vct = td_as_vctree(td)
        assert validate_vctree(vct).ok
        checked += 1
    assert checked == 100
    elapsed = time.monotonic() - start
    report(11, elapsed, "100 generated tree decompositions all validate as vertex-cut trees")
