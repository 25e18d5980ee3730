"""Minimal tree realizations and exact small-instance complexity optimizers.

For a tree decomposition (T, omega) of a code C, the minimal realization
assigns to each edge the quotient C|_J(e) / C_J(e) as its state space,
where J(e) is the coordinate set on one side of the edge.  Its dimensions
obey closed formulas in terms of cross-sections:

    dim S_e = dim C - dim C_J(e) - dim C_J'(e)
    dim C_v = dim C - sum_i dim C_J_i     (components J_i of T - v)

build_minimal constructs the realization explicitly (states are coset
coordinates over a fixed quotient basis); the formulas and a brute-force
enumeration oracle cross-check it in the test suite.
"""

from __future__ import annotations

from typing import Dict, List, Sequence, Tuple

from . import codes as codes_mod
from .codes import LinearCode, canonicalize, cross_section, project
from .fields import rank, solve_combination
from .graphs import (
    Edge,
    Graph,
    delete_edges,
    delete_vertices,
    enumerate_cubic_trees,
    enumerate_path_orderings,
    path_graph,
    spanning_tree,
)
from .realizations import (
    GraphDecomposition,
    GraphicalModel,
    full_state_space,
    local_label_order,
)


def _require_tree(decomp: GraphDecomposition) -> None:
    if not decomp.graph.is_tree():
        raise ValueError("decomposition graph is not a tree")


def edge_sides(tree: Graph, e: Edge) -> Tuple[frozenset, frozenset]:
    """The two vertex sets of T minus e; first the side holding the least vertex."""
    if e not in tree.edges:
        raise KeyError(f"unknown edge {e}")
    _, comps = delete_edges(tree, [e])
    assert len(comps) == 2
    low = min(tree.vertices)
    first = next(c for c in comps if low in c)
    second = next(c for c in comps if low not in c)
    return first, second


def dim_state(code: LinearCode, td: GraphDecomposition, e: Edge) -> int:
    """dim C - dim C_J(e) - dim C_J'(e), via cross-sections."""
    _require_tree(td)
    side_a, side_b = edge_sides(td.graph, e)
    ja = td.symbols_on(side_a)
    jb = td.symbols_on(side_b)
    return code.dim - cross_section(code, ja).dim - cross_section(code, jb).dim


def dim_constraint(code: LinearCode, td: GraphDecomposition, v: str) -> int:
    """dim C - sum over components T_i of T - v of dim C_J_i."""
    _require_tree(td)
    _, comps = delete_vertices(td.graph, {v})
    total = code.dim
    for comp in comps:
        total -= cross_section(code, td.symbols_on(comp)).dim
    return total


def kappa_of_tree_decomp(code: LinearCode, td: GraphDecomposition) -> int:
    """Least max constraint dimension over realizations extending (T, omega).

    Equals the max of the per-vertex closed formula; no search needed.
    """
    _require_tree(td)
    return max(dim_constraint(code, td, v) for v in sorted(td.graph.vertices))


class _EdgeStateMap:
    """Coset coordinates on an edge: the state of c is c|_J(e) + C_J(e),
    written over a fixed basis of C|_J(e) extending a basis of C_J(e)."""

    def __init__(self, code: LinearCode, td: GraphDecomposition, e: Edge):
        side_a, _ = edge_sides(td.graph, e)
        self.positions = [i for i, lbl in enumerate(code.index_set) if td.omega[lbl] in side_a]
        ja = [code.index_set[i] for i in self.positions]
        inner = cross_section(code, ja)
        proj = project(code, ja)
        basis: List[List[int]] = [list(g) for g in inner.generators]
        extension: List[List[int]] = []
        base_rank = len(basis)
        for g in proj.generators:
            cand = basis + extension + [list(g)]
            if rank(cand, code.q) > base_rank + len(extension):
                extension.append(list(g))
        self.q = code.q
        self.basis = basis + extension
        self.inner_dim = len(basis)
        self.dim = len(extension)

    def state_of(self, word: Sequence[int]) -> List[int]:
        y = [word[i] for i in self.positions]
        coeffs = solve_combination(self.basis, y, self.q)
        assert coeffs is not None, "codeword restriction escapes its projection"
        return coeffs[self.inner_dim:]


def build_minimal(code: LinearCode, td: GraphDecomposition) -> GraphicalModel:
    """The minimal tree realization of the code on (T, omega)."""
    _require_tree(td)
    if set(td.index_set) != set(code.index_set):
        raise ValueError("decomposition and code use different index sets")
    aligned = codes_mod.permute_columns(code, td.index_set)
    tree = td.graph
    maps: Dict[Edge, _EdgeStateMap] = {}
    states: Dict[Edge, LinearCode] = {}
    for e in sorted(tree.edges):
        m = _EdgeStateMap(aligned, td, e)
        maps[e] = m
        states[e] = full_state_space(e, m.dim, aligned.q)

    constraints: Dict[str, LinearCode] = {}
    for v in sorted(tree.vertices):
        sym_pos = [aligned.position(lbl) for lbl in td.symbols_at(v)]
        incident = tree.incident_edges(v)
        rows = []
        for g in aligned.generators:
            row = [g[i] for i in sym_pos]
            for e in incident:
                row.extend(maps[e].state_of(g))
            rows.append(row)
        order = local_label_order(td, states, v)
        constraints[v] = canonicalize(rows, order, aligned.q)
    return GraphicalModel(td, states, constraints)


def build_row_span(code: LinearCode, td: GraphDecomposition) -> GraphicalModel:
    """A generally non-minimal tree realization: the state on an edge lists
    the coefficients of the generator rows whose support meets both sides.

    This generalizes the product construction of trellises from a fixed
    generator matrix; the test suite uses it as the alternative builder
    against which per-edge/per-vertex minimality is checked.
    """
    _require_tree(td)
    if set(td.index_set) != set(code.index_set):
        raise ValueError("decomposition and code use different index sets")
    aligned = codes_mod.permute_columns(code, td.index_set)
    tree = td.graph
    active: Dict[Edge, List[int]] = {}
    states: Dict[Edge, LinearCode] = {}
    for e in sorted(tree.edges):
        side_a, side_b = edge_sides(tree, e)
        pos_a = [i for i, lbl in enumerate(aligned.index_set) if td.omega[lbl] in side_a]
        pos_b = [i for i, lbl in enumerate(aligned.index_set) if td.omega[lbl] in side_b]
        rows = []
        for j, g in enumerate(aligned.generators):
            if any(g[i] for i in pos_a) and any(g[i] for i in pos_b):
                rows.append(j)
        active[e] = rows
        states[e] = full_state_space(e, len(rows), aligned.q)

    constraints: Dict[str, LinearCode] = {}
    for v in sorted(tree.vertices):
        sym_pos = [aligned.position(lbl) for lbl in td.symbols_at(v)]
        incident = tree.incident_edges(v)
        rows = []
        for j, g in enumerate(aligned.generators):
            row = [g[i] for i in sym_pos]
            for e in incident:
                row.extend(1 if j == r else 0 for r in active[e])
            rows.append(row)
        order = local_label_order(td, states, v)
        constraints[v] = canonicalize(rows, order, aligned.q)
    return GraphicalModel(td, states, constraints)


def extend_via_spanning_tree(code: LinearCode, decomp: GraphDecomposition) -> GraphicalModel:
    """Extend any graph decomposition to a realization: build the minimal
    realization on a spanning tree and put zero-dimensional state spaces
    on the remaining edges."""
    tree = spanning_tree(decomp.graph)
    td = GraphDecomposition(tree, decomp.index_set, dict(decomp.omega))
    on_tree = build_minimal(code, td)
    states = dict(on_tree.state_spaces)
    for e in sorted(decomp.graph.edges - tree.edges):
        states[e] = full_state_space(e, 0, code.q)
    # Zero-dimensional state spaces carry no labels, so the tree-model
    # constraints are already on the right local index sets.
    return GraphicalModel(decomp, states, dict(on_tree.constraints))


def path_decomposition(code: LinearCode, ordering: Sequence[str]) -> GraphDecomposition:
    """Bijective path decomposition: coordinate ordering[t] on the t-th vertex."""
    if sorted(ordering) != sorted(code.index_set):
        raise ValueError("ordering must be a permutation of the index set")
    n = len(ordering)
    names = [f"p{t}" for t in range(n)]
    return GraphDecomposition(
        path_graph(names), code.index_set, {lbl: names[t] for t, lbl in enumerate(ordering)}
    )


def kappa_path_exact(code: LinearCode, max_n: int = 10) -> Tuple[int, Tuple[str, ...]]:
    """Minimum path complexity over all bijective coordinate orderings
    (up to reversal), with the first optimal ordering as witness."""
    n = code.n
    if n == 0:
        raise ValueError("empty code")
    best: int | None = None
    witness: Tuple[str, ...] | None = None
    for perm in enumerate_path_orderings(n, max_n):
        ordering = tuple(code.index_set[i] for i in perm)
        value = kappa_of_path_ordering(code, ordering)
        if best is None or value < best:
            best, witness = value, ordering
    assert best is not None and witness is not None
    return best, witness


def kappa_of_path_ordering(code: LinearCode, ordering: Sequence[str]) -> int:
    """Max constraint dimension of the minimal realization on the given
    bijective path ordering."""
    n = len(ordering)
    if sorted(ordering) != sorted(code.index_set):
        raise ValueError("ordering must be a permutation of the index set")
    k = code.dim
    prefix_dims = [0] * (n + 1)  # dim of the cross-section on the first t labels
    suffix_dims = [0] * (n + 2)
    for t in range(1, n + 1):
        prefix_dims[t] = cross_section(code, ordering[:t]).dim
    for t in range(n, 0, -1):
        suffix_dims[t] = cross_section(code, ordering[t - 1:]).dim
    best = 0
    for t in range(1, n + 1):
        best = max(best, k - prefix_dims[t - 1] - suffix_dims[t + 1])
    return best


def kappa_tree_exact(code: LinearCode, max_n: int = 10) -> Tuple[int, GraphDecomposition]:
    """Minimum tree complexity over all leaf-labeled cubic trees with a
    bijection from coordinates to leaves; first optimal witness returned.

    Codes of length below 3 fall back to path decompositions.
    """
    n = code.n
    if n == 0:
        raise ValueError("empty code")
    if n < 3:
        value, ordering = kappa_path_exact(code, max_n)
        return value, path_decomposition(code, ordering)
    best: int | None = None
    witness: GraphDecomposition | None = None
    for tree, leaves in enumerate_cubic_trees(n, max_n):
        omega = {code.index_set[i]: leaves[i] for i in range(n)}
        td = GraphDecomposition(tree, code.index_set, omega)
        value = kappa_of_tree_decomp(code, td)
        if best is None or value < best:
            best, witness = value, td
    assert best is not None and witness is not None
    return best, witness
