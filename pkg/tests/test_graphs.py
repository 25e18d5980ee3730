from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphreal import fixtures
from graphreal.graphs import (
    StarPartition,
    cycle_graph,
    delete_edges,
    delete_vertices,
    double_factorial,
    enumerate_cubic_trees,
    enumerate_path_orderings,
    make_graph,
    path_graph,
    spanning_tree,
    star_partition_from_cut,
    validate_star_partition,
)
from graphreal.guards import GuardExceeded


def eleven_cycle():
    return fixtures.appendix_graph()


def test_no_self_loops_or_parallel_edges():
    with pytest.raises(ValueError):
        make_graph(["a"], [("a", "a")])
    with pytest.raises(ValueError):
        make_graph(["a", "b"], [("a", "b"), ("b", "a")])


def test_delete_vertices_cycle():
    g = eleven_cycle()
    _, comps = delete_vertices(g, {"v2", "v7"})
    assert sorted(comps, key=min) == sorted(
        [frozenset({"v3", "v4", "v5", "v6"}), frozenset({"v8", "v9", "v10", "v0", "v1"})],
        key=min,
    )
    _, comps1 = delete_vertices(g, {"v0"})
    assert len(comps1) == 1


def test_delete_internal_tree_node():
    t = spanning_tree(make_graph(["a", "b", "c", "d"], [("a", "b"), ("a", "c"), ("a", "d")]))
    _, comps = delete_vertices(t, {"a"})
    assert len(comps) == 3


def test_delete_vertices_unknown():
    with pytest.raises(KeyError):
        delete_vertices(eleven_cycle(), {"nope"})


def test_delete_edges_cycle():
    g = eleven_cycle()
    _, comps = delete_edges(g, [("v4", "v5"), ("v10", "v0")])
    assert frozenset({"v5", "v6", "v7", "v8", "v9", "v10"}) in comps
    assert frozenset({"v0", "v1", "v2", "v3", "v4"}) in comps

    _, comps1 = delete_edges(g, [("v0", "v1")])
    assert len(comps1) == 1


def test_delete_tree_edge_gives_two_components():
    p = path_graph(["a", "b", "c", "d"])
    _, comps = delete_edges(p, [("b", "c")])
    assert sorted(comps, key=min) == [frozenset({"a", "b"}), frozenset({"c", "d"})]


def test_delete_edges_unknown():
    with pytest.raises(KeyError):
        delete_edges(eleven_cycle(), [("v0", "v5")])


def test_star_partition_validation():
    g = eleven_cycle()
    trivial = StarPartition(v0=g.vertices, parts=())
    assert validate_star_partition(g, trivial).ok

    good = StarPartition(
        v0=frozenset({"v2", "v7"}),
        parts=(
            frozenset({"v3", "v4", "v5", "v6"}),
            frozenset({"v8", "v9", "v10", "v0", "v1"}),
        ),
    )
    assert validate_star_partition(g, good).ok

    bad = StarPartition(
        v0=frozenset({"v2"}),
        parts=(
            frozenset({"v3", "v4", "v5", "v6"}),
            frozenset({"v7", "v8", "v9", "v10", "v0", "v1"}),
        ),
    )
    report = validate_star_partition(g, bad)
    assert not report.ok
    assert "v6" in report.violation or "v7" in report.violation


def test_star_partition_allows_empty_parts():
    g = eleven_cycle()
    sp = StarPartition(v0=g.vertices, parts=(frozenset(), frozenset()))
    assert validate_star_partition(g, sp).ok


@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_deletion_induces_star_partition(data):
    n = data.draw(st.integers(min_value=3, max_value=8))
    g = cycle_graph([f"v{i}" for i in range(n)])
    extra = data.draw(
        st.lists(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda p: p[0] != p[1]),
            max_size=3,
        )
    )
    edges = list(g.edges) + [(f"v{a}", f"v{b}") for a, b in extra]
    seen = set()
    dedup = []
    for u, v in edges:
        e = (u, v) if u < v else (v, u)
        if e not in seen:
            seen.add(e)
            dedup.append(e)
    g = make_graph(g.vertices, dedup)
    W = {f"v{i}" for i in data.draw(st.lists(st.integers(0, n - 1), unique=True, max_size=n - 1))}
    sp = star_partition_from_cut(g, W)
    assert validate_star_partition(g, sp).ok


def test_spanning_tree_cycle_and_tree():
    g = eleven_cycle()
    t = spanning_tree(g)
    assert t.is_tree()
    assert len(t.edges) == 10
    # BFS from v0 keeps every edge except the one closing the cycle.
    assert sorted(g.edges - t.edges) == [("v10", "v9")] or len(g.edges - t.edges) == 1

    p = path_graph(["a", "b", "c"])
    assert spanning_tree(p) == p

    k4 = make_graph("abcd", [("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d")])
    t4 = spanning_tree(k4)
    assert t4.edges == frozenset({("a", "b"), ("a", "c"), ("a", "d")})


def test_spanning_tree_disconnected():
    g = make_graph(["a", "b", "c"], [("a", "b")])
    with pytest.raises(ValueError):
        spanning_tree(g)


@pytest.mark.parametrize("n,count", [(3, 1), (4, 3), (5, 15), (6, 105), (7, 945), (8, 10395)])
def test_cubic_tree_counts(n, count):
    assert double_factorial(2 * n - 5) == count
    trees = list(enumerate_cubic_trees(n))
    assert len(trees) == count
    shapes = set()
    for tree, leaves in trees:
        assert tree.is_tree()
        assert len(leaves) == n
        for leaf in leaves:
            assert tree.degree(leaf) == 1
        for v in tree.vertices - set(leaves):
            assert tree.degree(v) == 3
        shapes.add(tree.edges)
    assert len(shapes) == count


def test_cubic_tree_guard():
    with pytest.raises(GuardExceeded):
        list(enumerate_cubic_trees(11))
    with pytest.raises(ValueError):
        list(enumerate_cubic_trees(2))


@pytest.mark.parametrize("n,count", [(2, 1), (3, 3), (4, 12), (5, 60)])
def test_path_ordering_counts(n, count):
    orders = list(enumerate_path_orderings(n))
    assert len(orders) == count
    # No ordering appears along with its reversal.
    as_set = set(orders)
    for o in orders:
        assert tuple(reversed(o)) not in as_set or n == 1


def test_path_ordering_guard_and_edge_cases():
    assert list(enumerate_path_orderings(1)) == [(0,)]
    with pytest.raises(GuardExceeded):
        list(enumerate_path_orderings(11))
