"""The vertex-cut-tree lower-bound pipeline.

Given a graph decomposition (G, omega) of a code and a vertex-cut tree
(T, beta) of G, every tree node z yields a vertex-cut inequality whose
right-hand side m(z) bounds the total constraint dimension inside its
bag.  Dividing the best of these by the vc-width lower-bounds the max
constraint dimension of every realization extending (G, omega):

    kappa >= max_z m(z) / vc-width(T, beta)

The same quantity equals the complexity of an induced tree decomposition
of the code: assigning each graph vertex to the tree node nearest the
maximizing node that still carries it in its bag partitions V(G), and
pulling the index map back through that assignment gives (T, gamma) with
kappa(C; T, gamma) = max_z m(z).  The certificate records both sides.

Corollaries divide code treewidth (pathwidth) by graph vc-treewidth
(vc-pathwidth), and a closed-form bound in the code parameters [n, k, d]
follows by bracketing the base-2 logarithm with certified dyadic bounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Mapping, Optional, Tuple

from .codes import LinearCode, cross_section
from .graphs import Graph
from .min_tree import kappa_of_tree_decomp, kappa_path_exact, kappa_tree_exact
from .realizations import GraphDecomposition
from .vctrees import (
    VertexCutTree,
    WidthResult,
    node_star_partition,
    tree_path,
    validate_vctree,
    vc_pathwidth_exact,
    vc_treewidth_exact,
    vc_treewidth_upper,
    vc_width,
)


def ceil_fraction(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


@dataclass(frozen=True)
class NodeBoundReport:
    """Per-node vertex-cut bounds over a vertex-cut tree and their max."""

    per_node: Mapping[str, int]
    max_value: int
    argmax: str


def _check_vct(decomp: GraphDecomposition, vct: VertexCutTree) -> None:
    if vct.target != decomp.graph:
        raise ValueError("vertex-cut tree targets a different graph")
    report = validate_vctree(vct)
    if not report.ok:
        raise ValueError(f"invalid vertex-cut tree: {report.violation}")


def node_bounds(code: LinearCode, decomp: GraphDecomposition, vct: VertexCutTree) -> NodeBoundReport:
    """m(z) = dim C - sum_i dim C_J_i over the star partition at each node,
    where J_i collects the coordinates mapped into the i-th part."""
    _check_vct(decomp, vct)
    per_node: Dict[str, int] = {}
    for z in sorted(vct.tree.vertices):
        sp = node_star_partition(vct, z)
        value = code.dim
        for part in sp.parts:
            value -= cross_section(code, decomp.symbols_on(part)).dim
        per_node[z] = value
    best = max(per_node.values())
    # Ties resolve to the least node label.
    argmax = min(z for z in per_node if per_node[z] == best)
    return NodeBoundReport(per_node, best, argmax)


@dataclass(frozen=True)
class BagOwnership:
    """Assignment of each graph vertex to the unique tree node that keeps
    it in its bag while lying closest to the chosen root."""

    owned: Mapping[str, frozenset]
    root: str


def bag_ownership(vct: VertexCutTree, root: str) -> BagOwnership:
    """owned(root) = bag(root); owned(z) = bag(z) minus every bag on the
    path from z (exclusive) to the root (inclusive).  The owned sets
    partition the target's vertex set."""
    if root not in vct.tree.vertices:
        raise KeyError(f"unknown tree node {root!r}")
    owned: Dict[str, frozenset] = {}
    for z in sorted(vct.tree.vertices):
        if z == root:
            owned[z] = frozenset(vct.bags[z])
            continue
        path = tree_path(vct.tree, z, root)[1:]  # exclusive of z, inclusive of root
        shadow = vct.bag_union(path)
        owned[z] = frozenset(vct.bags[z] - shadow)
    union = frozenset().union(*owned.values())
    if union != vct.target.vertices:
        raise AssertionError("ownership does not cover the graph")
    total = sum(len(s) for s in owned.values())
    if total != len(vct.target.vertices):
        raise AssertionError("ownership sets overlap")
    return BagOwnership(owned, root)


def induced_code_decomposition(
    code: LinearCode, decomp: GraphDecomposition, vct: VertexCutTree, root: str
) -> GraphDecomposition:
    """The tree decomposition (T, gamma) of the code with
    gamma(i) = the tree node owning omega(i)."""
    ownership = bag_ownership(vct, root)
    owner_of: Dict[str, str] = {}
    for z, owned in ownership.owned.items():
        for v in owned:
            owner_of[v] = z
    gamma = {lbl: owner_of[decomp.omega[lbl]] for lbl in decomp.index_set}
    return GraphDecomposition(vct.tree, decomp.index_set, gamma)


@dataclass(frozen=True)
class LowerBoundCertificate:
    bound: int
    vc_width: int
    node_bound_report: NodeBoundReport
    induced_decomposition: GraphDecomposition
    induced_complexity: int  # kappa of the minimal realization on (T, gamma)
    vctree: VertexCutTree


def vctree_lower_bound(
    code: LinearCode, decomp: GraphDecomposition, vct: VertexCutTree
) -> LowerBoundCertificate:
    """The main lower bound: kappa of any realization extending the
    decomposition is at least max_z m(z) / vc-width, and the numerator is
    certified as the complexity of the induced tree decomposition."""
    report = node_bounds(code, decomp, vct)
    gamma_td = induced_code_decomposition(code, decomp, vct, report.argmax)
    induced = kappa_of_tree_decomp(code, gamma_td)
    if induced != report.max_value:
        raise AssertionError(
            f"induced decomposition has complexity {induced}, node bounds give {report.max_value}"
        )
    width = vc_width(vct, validate=False)
    bound = ceil_fraction(Fraction(report.max_value, width))
    return LowerBoundCertificate(
        bound=bound,
        vc_width=width,
        node_bound_report=report,
        induced_decomposition=gamma_td,
        induced_complexity=induced,
        vctree=vct,
    )


@dataclass(frozen=True)
class CorollaryInput:
    """One side of a corollary bound with its provenance."""

    value: int
    provenance: str
    exact: bool


@dataclass(frozen=True)
class CorollaryReport:
    tree_bound: Optional[int]
    path_bound: Optional[int]
    best: int
    kappa_tree: Optional[CorollaryInput]
    kappa_path: Optional[CorollaryInput]
    vc_tree: Optional[CorollaryInput]
    vc_path: Optional[CorollaryInput]
    notes: Tuple[str, ...] = ()


def _as_width_input(value, kind: str) -> Optional[CorollaryInput]:
    if value is None:
        return None
    if isinstance(value, CorollaryInput):
        return value
    if isinstance(value, WidthResult):
        return CorollaryInput(value.value, f"{kind}: {value.certainty}", value.certainty == "exact")
    if isinstance(value, VertexCutTree):
        report = validate_vctree(value)
        if not report.ok:
            raise ValueError(f"supplied witness is invalid: {report.violation}")
        return CorollaryInput(vc_width(value, validate=False), f"{kind}: validated witness", False)
    if isinstance(value, int):
        return CorollaryInput(value, f"{kind}: supplied", True)
    raise TypeError(f"cannot interpret {value!r} as a width input")


def corollary_bounds(
    code: Optional[LinearCode],
    graph: Graph,
    *,
    kappa_tree: Optional[int] = None,
    kappa_path: Optional[int] = None,
    kappa_provenance: str = "supplied",
    vc_tree=None,
    vc_path=None,
    max_code_n: int = 6,
    max_graph_n: int = 8,
) -> CorollaryReport:
    """Graph-level corollaries: kappa(C; G) >= kappa_tree(C) / vc-treewidth(G)
    and >= kappa_path(C) / vc-pathwidth(G).

    Code complexities may be supplied (exact search is infeasible beyond
    small lengths); graph widths may be supplied, given as witnesses, or
    computed (exact for small graphs, min-fill upper bound otherwise).
    A width that is only an upper bound on the optimum still yields a
    valid, merely weaker, corollary bound and is flagged as such.
    """
    notes = []

    kt: Optional[CorollaryInput] = None
    if kappa_tree is not None:
        kt = CorollaryInput(kappa_tree, kappa_provenance, True)
    elif code is not None and code.n <= max_code_n:
        value, _ = kappa_tree_exact(code, max_n=max_code_n)
        kt = CorollaryInput(value, "exhaustive search over cubic trees", True)

    kp: Optional[CorollaryInput] = None
    if kappa_path is not None:
        kp = CorollaryInput(kappa_path, kappa_provenance, True)
    elif code is not None and code.n <= max_code_n:
        value, _ = kappa_path_exact(code, max_n=max_code_n)
        kp = CorollaryInput(value, "exhaustive search over orderings", True)

    vt = _as_width_input(vc_tree, "vc-treewidth")
    if vt is None:
        if graph.n <= max_graph_n:
            vt = _as_width_input(vc_treewidth_exact(graph, max_exact=max_graph_n), "vc-treewidth")
        else:
            vt = _as_width_input(vc_treewidth_upper(graph), "vc-treewidth")
            notes.append("vc-treewidth is an upper bound; the corollary bound is valid but may be weak")

    vp = _as_width_input(vc_path, "vc-pathwidth")
    if vp is None and graph.n <= max_graph_n:
        vp = _as_width_input(vc_pathwidth_exact(graph, max_exact=max_graph_n), "vc-pathwidth")
    if vp is None:
        notes.append("no vc-pathwidth available; path corollary skipped")

    tree_bound = None
    if kt is not None and vt is not None and vt.value > 0:
        tree_bound = ceil_fraction(Fraction(kt.value, vt.value))
    path_bound = None
    if kp is not None and vp is not None and vp.value > 0:
        path_bound = ceil_fraction(Fraction(kp.value, vp.value))
    best = max([b for b in (tree_bound, path_bound) if b is not None], default=0)
    return CorollaryReport(
        tree_bound=tree_bound,
        path_bound=path_bound,
        best=best,
        kappa_tree=kt,
        kappa_path=kp,
        vc_tree=vt,
        vc_path=vp,
        notes=tuple(notes),
    )


def log2_bracket(m: int, precision_bits: int = 16) -> Tuple[Fraction, Fraction]:
    """Dyadic rationals lo <= log2(m) <= hi with hi - lo <= 2**-precision_bits.

    Exact (lo == hi) for powers of two.  Uses one big integer power:
    with M = m**(2**p) and t = floor(log2(M)), log2(m) lies in
    [t / 2**p, (t+1) / 2**p].
    """
    if m < 1:
        raise ValueError("logarithm of a nonpositive integer")
    if m & (m - 1) == 0:
        exact = Fraction(m.bit_length() - 1)
        return exact, exact
    power = 1 << precision_bits
    big = m**power
    t = big.bit_length() - 1
    return Fraction(t, power), Fraction(t + 1, power)


@dataclass(frozen=True)
class NkdBoundReport:
    n: int
    k: int
    d: int
    path_bound: Fraction  # k(d-1)/n, lower bound on path complexity
    path_bound_int: int
    tree_bound_low: Fraction
    tree_bound_high: Fraction
    tree_bound_int: int  # certified: tree complexity is at least this
    log2_low: Fraction
    log2_high: Fraction


def nkd_tree_complexity_bound(n: int, k: int, d: int, precision_bits: int = 16) -> NkdBoundReport:
    """The closed-form bound k(d-1) / (n (3 + 2 log2(n-1))) on the least
    tree complexity of any [n, k, d] code, as a certified rational
    interval; the integer bound is the ceiling of the interval's low end.

    The intermediate path bound k(d-1)/n is reported as well.
    """
    if n <= 1:
        raise ValueError("need n > 1")
    if k < 0 or d < 1 or k > n or d > n:
        raise ValueError("implausible code parameters")
    numerator = k * (d - 1)
    path_bound = Fraction(numerator, n)
    lo, hi = log2_bracket(n - 1, precision_bits)
    tree_low = Fraction(numerator) / (n * (3 + 2 * hi))
    tree_high = Fraction(numerator) / (n * (3 + 2 * lo))
    return NkdBoundReport(
        n=n,
        k=k,
        d=d,
        path_bound=path_bound,
        path_bound_int=ceil_fraction(path_bound),
        tree_bound_low=tree_low,
        tree_bound_high=tree_high,
        tree_bound_int=ceil_fraction(tree_low),
        log2_low=lo,
        log2_high=hi,
    )
