"""Cut-set lower bounds on the complexity of realizations extending a
graph decomposition.

Edge cuts bound the total state dimension crossing them; star partitions
bound the total constraint dimension carried by the hub part V0.  The
bounds are pure cross-section arithmetic on the code, so they apply to
every realization extending the decomposition.  A collection of
vertex-cut bounds also yields an exact LP lower bound on the total
constraint dimension.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

from . import lp
from .codes import LinearCode, cross_section, permute_columns, project
from .graphs import (
    Edge,
    Graph,
    StarPartition,
    delete_edges,
    delete_vertices,
    norm_edge,
    star_partition_from_cut,
    validate_star_partition,
)
from .realizations import (
    GraphDecomposition,
    GraphicalModel,
    full_behavior,
    local_label_order,
)


@dataclass(frozen=True)
class CutBoundResult:
    """One cut inequality: lhs_description >= rhs for every realization
    extending the decomposition.  A nonpositive rhs is valid but vacuous."""

    cut: Tuple
    rhs: int
    lhs_description: str

    @property
    def vacuous(self) -> bool:
        return self.rhs <= 0


def _check_alignment(code: LinearCode, decomp: GraphDecomposition) -> None:
    if set(code.index_set) != set(decomp.index_set):
        raise ValueError("code and decomposition use different index sets")


def edge_cut_rhs(
    code: LinearCode,
    decomp: GraphDecomposition,
    partition: Tuple[Iterable[str], Iterable[str]],
    X: Iterable[Sequence[str]],
) -> CutBoundResult:
    """Lower bound on the total state dimension across the edge cut X
    separating the vertex partition (V', V'')."""
    _check_alignment(code, decomp)
    va, vb = frozenset(partition[0]), frozenset(partition[1])
    if va | vb != decomp.graph.vertices or va & vb:
        raise ValueError("partition must split the vertex set in two")
    cut = frozenset(norm_edge(u, v) for u, v in X)
    _, comps = delete_edges(decomp.graph, cut)
    for comp in comps:
        if comp & va and comp & vb:
            raise ValueError("the edge set does not separate the partition")
    ja = decomp.symbols_on(va)
    jb = decomp.symbols_on(vb)
    rhs = code.dim - cross_section(code, ja).dim - cross_section(code, jb).dim
    return CutBoundResult(
        cut=tuple(sorted(cut)),
        rhs=rhs,
        lhs_description="sum of state dimensions over the cut edges",
    )


def vertex_cut_rhs(code: LinearCode, decomp: GraphDecomposition, sp: StarPartition) -> CutBoundResult:
    """Lower bound on the total constraint dimension carried by V0."""
    _check_alignment(code, decomp)
    report = validate_star_partition(decomp.graph, sp)
    if not report.ok:
        raise ValueError(f"invalid star partition: {report.violation}")
    rhs = code.dim
    for part in sp.parts:
        rhs -= cross_section(code, decomp.symbols_on(part)).dim
    return CutBoundResult(
        cut=tuple(sorted(sp.v0)),
        rhs=rhs,
        lhs_description="sum of constraint dimensions over V0",
    )


def vertex_deletion_bound(code: LinearCode, decomp: GraphDecomposition, W: Iterable[str]) -> CutBoundResult:
    """The vertex-cut bound for the star partition induced by deleting W."""
    sp = star_partition_from_cut(decomp.graph, W)
    return vertex_cut_rhs(code, decomp, sp)


def star_tree_model(model: GraphicalModel, sp: StarPartition, max_vars: int | None = None) -> GraphicalModel:
    """Collapse a realization onto the star tree induced by a star partition.

    The hub absorbs V0, each leaf absorbs one part; leaf-to-hub states are
    the behavior's projections onto the edges crossing between the part
    and V0.  The result is a tree realization of the same code.
    """
    decomp = model.decomposition
    g = decomp.graph
    report = validate_star_partition(g, sp)
    if not report.ok:
        raise ValueError(f"invalid star partition: {report.violation}")
    behavior = full_behavior(model, max_vars)

    hub = "hub"
    leaf_names = [f"part{i}" for i in range(1, len(sp.parts) + 1)]
    tree_vertices = [hub, *leaf_names]
    tree_edges = [(hub, leaf) for leaf in leaf_names]
    tree = Graph(frozenset(tree_vertices), frozenset(norm_edge(*e) for e in tree_edges))

    omega: Dict[str, str] = {}
    for lbl in decomp.index_set:
        v = decomp.omega[lbl]
        if v in sp.v0:
            omega[lbl] = hub
        else:
            for name, part in zip(leaf_names, sp.parts):
                if v in part:
                    omega[lbl] = name
                    break
    new_decomp = GraphDecomposition(tree, decomp.index_set, omega)

    # Crossing edges per part; their state labels become the new states.
    crossing: Dict[str, List[Edge]] = {}
    for name, part in zip(leaf_names, sp.parts):
        crossing[name] = sorted(
            e for e in g.edges if (e[0] in part) != (e[1] in part)
        )
    state_label_sets: Dict[Edge, Tuple[str, ...]] = {}
    states: Dict[Edge, LinearCode] = {}
    for name in leaf_names:
        labels: List[str] = []
        for e in crossing[name]:
            labels.extend(model.state_spaces[e].index_set)
        edge = norm_edge(hub, name)
        state_label_sets[edge] = tuple(labels)
        states[edge] = project(behavior, labels)

    constraints: Dict[str, LinearCode] = {}
    for name, part in zip(leaf_names, sp.parts):
        wanted = list(new_decomp.symbols_at(name))
        for lbl in state_label_sets[norm_edge(hub, name)]:
            wanted.append(lbl)
        constraints[name] = project(behavior, wanted)
    hub_wanted = list(new_decomp.symbols_at(hub))
    for e in sorted(states):
        hub_wanted.extend(state_label_sets[e])
    constraints[hub] = project(behavior, hub_wanted)

    # Reorder each local code onto the canonical local label order.
    fixed: Dict[str, LinearCode] = {}
    for v in tree.vertices:
        order = local_label_order(new_decomp, states, v)
        fixed[v] = permute_columns(constraints[v], order)
    return GraphicalModel(new_decomp, states, fixed)


def lp_kappa_plus_lower_bound(
    code: LinearCode, decomp: GraphDecomposition, cuts: Sequence[Iterable[str]]
) -> Fraction:
    """Exact LP lower bound on the total constraint dimension.

    Minimizes sum of xi_v subject to, for each cut W, the induced
    vertex-cut inequality sum_{w in W} xi_w >= bound(W), with xi >= 0.
    """
    _check_alignment(code, decomp)
    vertices = sorted(decomp.graph.vertices)
    index = {v: i for i, v in enumerate(vertices)}
    constraints: List[Tuple[List[Fraction], Fraction]] = []
    for W in cuts:
        members = frozenset(W)
        bound = vertex_deletion_bound(code, decomp, members)
        row = [Fraction(0)] * len(vertices)
        for w in members:
            row[index[w]] = Fraction(1)
        constraints.append((row, Fraction(bound.rhs)))
    objective = [Fraction(1)] * len(vertices)
    return lp.solve_min(objective, constraints).value


def kappa_lower_from_cuts(
    code: LinearCode, decomp: GraphDecomposition, cuts: Sequence[Iterable[str]]
) -> int:
    """Max over cuts W of ceil(bound(W) / |W|): a lower bound on the max
    constraint dimension, since the max is at least the average."""
    cuts = list(cuts)
    if not cuts:
        raise ValueError("no cuts given")
    best = 0
    for W in cuts:
        members = frozenset(W)
        if not members:
            raise ValueError("empty cut")
        rhs = vertex_deletion_bound(code, decomp, members).rhs
        value = -(-rhs // len(members))
        best = max(best, value)
    return best


def disconnecting_subsets(g: Graph, max_size: int = 2, include_full: bool = True) -> List[frozenset]:
    """All vertex subsets up to max_size that disconnect the graph, plus
    (optionally) the full vertex set."""
    out: List[frozenset] = []
    vertices = sorted(g.vertices)
    for size in range(1, max_size + 1):
        for combo in itertools.combinations(vertices, size):
            W = frozenset(combo)
            if len(W) >= g.n:
                continue
            _, comps = delete_vertices(g, W)
            if len(comps) >= 2:
                out.append(W)
    if include_full:
        out.append(frozenset(g.vertices))
    return out
