"""Graphical models of codes: state spaces on edges, local constraints on
vertices, and the full behavior they cut out.

A model's full behavior is computed exactly as the kernel of the stacked
parity checks of all local constraints and state spaces.  A model is a
realization of a code C when it is essential (every constraint and state
space is fully used) and its behavior restricted to the symbol
coordinates equals C.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Mapping, Sequence, Tuple

from . import codes as codes_mod
from .codes import LinearCode, canonicalize, parity_check_rows, project
from .fields import nullspace, solve_combination
from .graphs import Edge, Graph, norm_edge
from .guards import GuardExceeded

DEFAULT_BEHAVIOR_VARS = 64


@dataclass(frozen=True)
class GraphDecomposition:
    """An assignment of code coordinates to the vertices of a connected graph."""

    graph: Graph
    index_set: Tuple[str, ...]
    omega: Mapping[str, str]

    def __post_init__(self):
        if not self.graph.is_connected():
            raise ValueError("decomposition graph must be connected")
        if set(self.omega) != set(self.index_set):
            raise ValueError("omega must map exactly the coordinate labels")
        for lbl, v in self.omega.items():
            if v not in self.graph.vertices:
                raise ValueError(f"omega({lbl!r}) = {v!r} is not a vertex")

    def symbols_at(self, v: str) -> Tuple[str, ...]:
        return tuple(lbl for lbl in self.index_set if self.omega[lbl] == v)

    def symbols_on(self, W) -> Tuple[str, ...]:
        members = set(W)
        return tuple(lbl for lbl in self.index_set if self.omega[lbl] in members)

    @property
    def is_tree_decomposition(self) -> bool:
        return self.graph.is_tree()


def state_labels(edge: Edge, dim: int) -> Tuple[str, ...]:
    u, v = edge
    return tuple(f"s:{u}~{v}:{k}" for k in range(dim))


def full_state_space(edge: Edge, dim: int, q: int) -> LinearCode:
    return codes_mod.full_space(state_labels(edge, dim), q)


def local_label_order(
    decomp: GraphDecomposition, state_spaces: Mapping[Edge, LinearCode], v: str
) -> Tuple[str, ...]:
    """Symbol labels at v, then the state labels of incident edges in sorted order."""
    out: List[str] = list(decomp.symbols_at(v))
    for e in decomp.graph.incident_edges(v):
        out.extend(state_spaces[e].index_set)
    return tuple(out)


@dataclass(frozen=True)
class GraphicalModel:
    decomposition: GraphDecomposition
    state_spaces: Mapping[Edge, LinearCode]
    constraints: Mapping[str, LinearCode]

    def __post_init__(self):
        g = self.decomposition.graph
        if set(self.state_spaces) != set(g.edges):
            raise ValueError("state spaces must cover exactly the edges")
        if set(self.constraints) != set(g.vertices):
            raise ValueError("constraints must cover exactly the vertices")
        q = None
        seen: set[str] = set(self.decomposition.index_set)
        for e in sorted(self.state_spaces):
            space = self.state_spaces[e]
            q = q or space.q
            if space.q != q:
                raise ValueError("mixed fields in state spaces")
            for lbl in space.index_set:
                if lbl in seen:
                    raise ValueError(f"state label {lbl!r} collides")
                seen.add(lbl)
        for v in sorted(self.constraints):
            cv = self.constraints[v]
            expected = local_label_order(self.decomposition, self.state_spaces, v)
            if cv.index_set != expected:
                raise ValueError(
                    f"constraint at {v!r} is on {cv.index_set}, expected {expected}"
                )
            if q is not None and cv.q != q:
                raise ValueError("mixed fields in constraints")
            for e in self.decomposition.graph.incident_edges(v):
                space = self.state_spaces[e]
                if space.index_set:
                    onto = project(cv, space.index_set)
                    for gen in onto.generators:
                        if not space.contains(gen):
                            raise ValueError(
                                f"constraint at {v!r} leaves the state space of edge {e}"
                            )

    @property
    def q(self) -> int:
        for cv in self.constraints.values():
            return cv.q
        raise ValueError("empty model")

    def global_label_order(self) -> Tuple[str, ...]:
        out: List[str] = list(self.decomposition.index_set)
        for e in sorted(self.state_spaces):
            out.extend(self.state_spaces[e].index_set)
        return tuple(out)


@dataclass(frozen=True)
class ComplexityReport:
    """The six constraint/state complexity measures of a model."""

    kappa: int
    kappa_plus: int
    kappa_tot: int
    sigma: int
    sigma_plus: int
    sigma_tot: int


def full_behavior(model: GraphicalModel, max_vars: int | None = None) -> LinearCode:
    """All symbol+state configurations satisfying every local constraint.

    Solved exactly as the kernel of the block system assembled from each
    constraint's (and state space's) parity-check matrix.
    """
    order = model.global_label_order()
    budget = DEFAULT_BEHAVIOR_VARS if max_vars is None else max_vars
    if len(order) > budget:
        raise GuardExceeded(f"full behavior over {len(order)} variables exceeds the budget of {budget}")
    position = {lbl: i for i, lbl in enumerate(order)}
    q = model.q
    rows: List[List[int]] = []

    def lift(local_rows: Sequence[Sequence[int]], local_order: Sequence[str]) -> None:
        cols = [position[lbl] for lbl in local_order]
        for r in local_rows:
            row = [0] * len(order)
            for c, x in zip(cols, r):
                row[c] = x % q
            rows.append(row)

    for v in sorted(model.constraints):
        cv = model.constraints[v]
        lift(parity_check_rows(cv), cv.index_set)
    for e in sorted(model.state_spaces):
        se = model.state_spaces[e]
        if se.index_set and se.dim < len(se.index_set):
            lift(parity_check_rows(se), se.index_set)

    kernel = nullspace(rows, len(order), q)
    return canonicalize(kernel, order, q)


def behavior_local(behavior: LinearCode, model: GraphicalModel, v: str) -> LinearCode:
    """The local configurations of the behavior at a vertex."""
    return project(behavior, local_label_order(model.decomposition, model.state_spaces, v))


def behavior_on_edge(behavior: LinearCode, model: GraphicalModel, e: Edge) -> LinearCode:
    return project(behavior, model.state_spaces[e].index_set)


def symbol_part(behavior: LinearCode, model: GraphicalModel) -> LinearCode:
    return project(behavior, model.decomposition.index_set)


def essentialize(model: GraphicalModel, max_vars: int | None = None) -> GraphicalModel:
    """Replace every constraint with the behavior's local projection and
    every state space with the behavior's edge projection.

    The full behavior is unchanged; the result is essential.
    """
    behavior = full_behavior(model, max_vars)
    new_states = {e: behavior_on_edge(behavior, model, e) for e in model.state_spaces}
    new_constraints = {v: behavior_local(behavior, model, v) for v in model.constraints}
    return GraphicalModel(model.decomposition, new_states, new_constraints)


@dataclass(frozen=True)
class RealizationReport:
    ok: bool
    essential: bool
    symbols_match: bool
    messages: Tuple[str, ...] = ()


def verify_realization(
    model: GraphicalModel, code: LinearCode, max_vars: int | None = None
) -> RealizationReport:
    """True iff the model is essential and its behavior restricted to the
    symbol coordinates equals the code."""
    if set(model.decomposition.index_set) != set(code.index_set):
        raise ValueError("model and code are on different index sets")
    behavior = full_behavior(model, max_vars)
    messages: List[str] = []
    essential = True
    for v in sorted(model.constraints):
        if behavior_local(behavior, model, v) != model.constraints[v]:
            essential = False
            messages.append(f"not essential: constraint at {v!r} is not fully used")
    for e in sorted(model.state_spaces):
        if behavior_on_edge(behavior, model, e) != model.state_spaces[e]:
            essential = False
            messages.append(f"not essential: state space at {e} is not fully used")
    symbols = symbol_part(behavior, model)
    target = codes_mod.permute_columns(code, model.decomposition.index_set)
    symbols_match = symbols == target
    if not symbols_match:
        messages.append(
            f"behavior projects to a [{symbols.n},{symbols.dim}] code, expected dim {target.dim}"
        )
    return RealizationReport(essential and symbols_match, essential, symbols_match, tuple(messages))


def measure(model: GraphicalModel) -> ComplexityReport:
    q = model.q
    cdims = [model.constraints[v].dim for v in sorted(model.constraints)]
    sdims = [model.state_spaces[e].dim for e in sorted(model.state_spaces)]
    return ComplexityReport(
        kappa=max(cdims) if cdims else 0,
        kappa_plus=sum(cdims),
        kappa_tot=sum(q**d for d in cdims),
        sigma=max(sdims) if sdims else 0,
        sigma_plus=sum(sdims),
        sigma_tot=sum(q**d for d in sdims),
    )


def build_star(code: LinearCode, max_vars: int | None = None) -> GraphicalModel:
    """The star-shaped tree realization: one leaf per coordinate, the code
    itself as the hub constraint, repetition checks at the leaves.

    Returned essentialized, so every state space has dimension at most 1.
    """
    hub = "hub"
    leaves = {lbl: f"leaf:{lbl}" for lbl in code.index_set}
    g = Graph(
        frozenset([hub, *leaves.values()]),
        frozenset(norm_edge(hub, leaf) for leaf in leaves.values()),
    )
    decomp = GraphDecomposition(g, code.index_set, {lbl: leaves[lbl] for lbl in code.index_set})

    edge_of = {lbl: norm_edge(hub, leaves[lbl]) for lbl in code.index_set}
    states = {edge_of[lbl]: full_state_space(edge_of[lbl], 1, code.q) for lbl in code.index_set}

    lifted = codes_mod.relabel(code, {lbl: states[edge_of[lbl]].index_set[0] for lbl in code.index_set})
    hub_order = local_label_order(decomp, states, hub)
    constraints: Dict[str, LinearCode] = {hub: codes_mod.permute_columns(lifted, hub_order)}
    for lbl in code.index_set:
        leaf = leaves[lbl]
        order = local_label_order(decomp, states, leaf)
        constraints[leaf] = canonicalize([[1, 1]], order, code.q)
    model = GraphicalModel(decomp, states, constraints)
    return essentialize(model, max_vars)


def reduce_states(model: GraphicalModel) -> GraphicalModel:
    """Isomorphic model in which every state space is a full space F^dim.

    States are rewritten in coordinates over a basis of each state space;
    constraint codes are transformed accordingly.
    """
    q = model.q
    new_states: Dict[Edge, LinearCode] = {}
    basis_of: Dict[Edge, List[List[int]]] = {}
    for e, space in model.state_spaces.items():
        basis_of[e] = [list(g) for g in space.generators]
        new_states[e] = full_state_space(e, space.dim, q)

    decomp = model.decomposition
    new_constraints: Dict[str, LinearCode] = {}
    for v, cv in model.constraints.items():
        syms = decomp.symbols_at(v)
        incident = decomp.graph.incident_edges(v)
        new_order = local_label_order(decomp, new_states, v)
        rows = []
        for gen in cv.generators:
            pos = {lbl: i for i, lbl in enumerate(cv.index_set)}
            row: List[int] = [gen[pos[lbl]] for lbl in syms]
            for e in incident:
                old_labels = model.state_spaces[e].index_set
                y = [gen[pos[lbl]] for lbl in old_labels]
                coeffs = solve_combination(basis_of[e], y, q)
                if coeffs is None:
                    raise ValueError(f"constraint at {v!r} leaves the state space of edge {e}")
                row.extend(coeffs)
            rows.append(row)
        new_constraints[v] = canonicalize(rows, new_order, q)
    return GraphicalModel(decomp, new_states, new_constraints)
