"""Vertex-cut trees of a graph: validators, widths and exact solvers.

A vertex-cut tree (T, beta) assigns a bag of graph vertices to every
tree node so that bags cover the graph (VC1), every graph vertex occurs
on a connected subtree (VC2, the running-intersection property), and at
each tree node the bag together with the bag-unions of the surrounding
subtrees forms a star partition of the graph (VC3).  Its vc-width is the
largest bag; the vc-treewidth of a graph is the least vc-width over all
its vertex-cut trees.

Tree decompositions in the classical sense satisfy the stronger edge
coverage condition (T3) and reinterpret directly as vertex-cut trees;
that conversion underlies the min-fill upper bound.

The exact solvers search a normalized family: trees are assembled
recursively, one child subtree per connected component of the territory
left after choosing a bag, bags are nonempty, adjacent bags differ, and
the total node count respects a budget (default: the number of graph
vertices).  Contracting equal adjacent bags, splicing out empty bags and
splitting multi-component subtrees shows every vertex-cut tree
normalizes into this family, though possibly with more nodes than the
budget allows; results therefore record the searched family.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple

from .graphs import (
    Graph,
    StarPartition,
    components,
    delete_vertices,
    make_graph,
    norm_edge,
    path_graph,
    validate_star_partition,
)
from .guards import GuardExceeded

Bag = FrozenSet[str]

EXACT_FAMILY_NOTE = (
    "exact within the searched family: per-component assembly, nonempty bags, "
    "adjacent bags distinct, node count within the budget"
)


@dataclass(frozen=True)
class VertexCutTree:
    tree: Graph
    bags: Mapping[str, Bag]
    target: Graph

    def __post_init__(self):
        if not self.tree.is_tree():
            raise ValueError("the underlying graph is not a tree")
        if set(self.bags) != set(self.tree.vertices):
            raise ValueError("bags must be assigned to exactly the tree nodes")
        for z, bag in self.bags.items():
            stray = bag - self.target.vertices
            if stray:
                raise ValueError(f"bag at {z!r} contains non-vertices {sorted(stray)}")

    def bag_union(self, nodes: Iterable[str]) -> Bag:
        out: set = set()
        for z in nodes:
            out |= self.bags[z]
        return frozenset(out)


@dataclass(frozen=True)
class GraphTreeDecomposition:
    tree: Graph
    bags: Mapping[str, Bag]
    target: Graph

    def __post_init__(self):
        VertexCutTree(self.tree, self.bags, self.target)  # structural checks

    def width(self) -> int:
        return max(len(b) for b in self.bags.values()) - 1


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violation: str | None = None


def _occurrence_violation(tree: Graph, bags: Mapping[str, Bag], target: Graph) -> str | None:
    """Check the running-intersection condition: for nodes x, y and any z
    on the tree path between them, bag(x) & bag(y) <= bag(z)."""
    for v in sorted(target.vertices):
        occ = sorted(z for z, bag in bags.items() if v in bag)
        if len(occ) <= 1:
            continue
        present = set(occ)
        sub_edges = [e for e in tree.edges if e[0] in present and e[1] in present]
        comps = components(present, sub_edges)
        if len(comps) > 1:
            x = min(comps[0])
            y = min(comps[1])
            for z in tree_path(tree, x, y)[1:-1]:
                if v not in bags[z]:
                    return (
                        f"vertex {v!r} is in the bags of {x!r} and {y!r} "
                        f"but not of {z!r} on the path between them"
                    )
    return None


def tree_path(tree: Graph, x: str, y: str) -> List[str]:
    """The unique path between two nodes of a tree, endpoints included."""
    parent: Dict[str, str] = {x: x}
    stack = [x]
    while stack:
        cur = stack.pop()
        if cur == y:
            break
        for nxt in sorted(tree.neighbors(cur)):
            if nxt not in parent:
                parent[nxt] = cur
                stack.append(nxt)
    path = [y]
    while path[-1] != x:
        path.append(parent[path[-1]])
    return list(reversed(path))


def node_star_partition(vct: VertexCutTree, z: str) -> StarPartition:
    """The star partition induced at a tree node: its bag as the hub and,
    per neighboring subtree, the subtree's bag union minus the hub."""
    _, comps = delete_vertices(vct.tree, {z})
    bag = vct.bags[z]
    parts = tuple(frozenset(vct.bag_union(comp) - bag) for comp in comps)
    return StarPartition(v0=bag, parts=parts)


def validate_vctree(vct: VertexCutTree) -> ValidationReport:
    covered = vct.bag_union(vct.tree.vertices)
    if covered != vct.target.vertices:
        missing = sorted(vct.target.vertices - covered)
        return ValidationReport(False, f"coverage fails: {missing} in no bag")
    occ = _occurrence_violation(vct.tree, vct.bags, vct.target)
    if occ is not None:
        return ValidationReport(False, f"running intersection fails: {occ}")
    for z in sorted(vct.tree.vertices):
        sp = node_star_partition(vct, z)
        report = validate_star_partition(vct.target, sp)
        if not report.ok:
            return ValidationReport(False, f"star partition fails at node {z!r}: {report.violation}")
    return ValidationReport(True)


def vc_width(vct: VertexCutTree, validate: bool = True) -> int:
    if validate:
        report = validate_vctree(vct)
        if not report.ok:
            raise ValueError(f"invalid vertex-cut tree: {report.violation}")
    return max(len(bag) for bag in vct.bags.values())


def validate_tree_decomposition(td: GraphTreeDecomposition) -> ValidationReport:
    covered = frozenset().union(*td.bags.values()) if td.bags else frozenset()
    if covered != td.target.vertices:
        missing = sorted(td.target.vertices - covered)
        return ValidationReport(False, f"coverage fails: {missing} in no bag")
    occ = _occurrence_violation(td.tree, td.bags, td.target)
    if occ is not None:
        return ValidationReport(False, f"running intersection fails: {occ}")
    for u, v in sorted(td.target.edges):
        if not any(u in bag and v in bag for bag in td.bags.values()):
            return ValidationReport(False, f"edge ({u!r}, {v!r}) is covered by no bag")
    return ValidationReport(True)


def td_as_vctree(td: GraphTreeDecomposition) -> VertexCutTree:
    """Reinterpret a tree decomposition as a vertex-cut tree.

    Every valid tree decomposition passes the vertex-cut validator; a
    failure here means the input was not a valid tree decomposition.
    """
    report = validate_tree_decomposition(td)
    if not report.ok:
        raise ValueError(f"invalid tree decomposition: {report.violation}")
    vct = VertexCutTree(td.tree, dict(td.bags), td.target)
    check = validate_vctree(vct)
    if not check.ok:
        raise AssertionError(
            f"a valid tree decomposition failed the vertex-cut conditions: {check.violation}"
        )
    return vct


def trivial_vctree(g: Graph) -> VertexCutTree:
    tree = make_graph(["t0"], [])
    return VertexCutTree(tree, {"t0": frozenset(g.vertices)}, g)


def identity_vctree(tree_shaped: Graph) -> VertexCutTree:
    """For a tree G, the width-1 vertex-cut tree with bag(z) = {z}."""
    if not tree_shaped.is_tree():
        raise ValueError("identity construction needs a tree")
    return VertexCutTree(tree_shaped, {v: frozenset({v}) for v in tree_shaped.vertices}, tree_shaped)


def cycle_vcpath(cycle: Graph) -> VertexCutTree:
    """The width-2 vertex-cut path of an n-cycle with vertices v0..v(n-1):
    path nodes z1..z(n-1) with bags {v0, vi}."""
    n = cycle.n
    expected = {f"v{i}" for i in range(n)}
    if cycle.vertices != frozenset(expected) or any(cycle.degree(v) != 2 for v in cycle.vertices):
        raise ValueError("expected a cycle on vertices v0..v(n-1)")
    tree = path_graph([f"z{i}" for i in range(1, n)])
    bags = {f"z{i}": frozenset({"v0", f"v{i}"}) for i in range(1, n)}
    return VertexCutTree(tree, bags, cycle)


@dataclass(frozen=True)
class WidthResult:
    value: int
    witness: VertexCutTree
    certainty: str  # "exact" or "upper-bound"
    note: str = ""
    nodes: int = 0


def is_two_connected(g: Graph) -> bool:
    if g.n < 3 or not g.is_connected():
        return False
    for v in sorted(g.vertices):
        _, comps = delete_vertices(g, {v})
        if len(comps) > 1:
            return False
    return True


_INF = 10**9


class _TreeSearch:
    """Iterative-deepening search for the least vc-width.

    decide(R, B): fewest subtree nodes that cover territory R under a
    parent bag B, over bags of size at most the current width.
    """

    def __init__(self, g: Graph, width: int):
        self.g = g
        self.width = width
        self.memo: Dict[Tuple[Bag, Bag], Tuple[int, Optional[Tuple[Bag, Tuple[Bag, ...]]]]] = {}

    def _candidates(self, pool: Bag) -> List[Bag]:
        out: List[Bag] = []
        items = sorted(pool)
        for size in range(1, self.width + 1):
            for combo in itertools.combinations(items, size):
                out.append(frozenset(combo))
        return out

    def _split(self, region: Bag, bag: Bag) -> List[Bag]:
        rest = region - bag
        sub_edges = [e for e in self.g.edges if e[0] in rest and e[1] in rest]
        return [frozenset(c) for c in components(rest, sub_edges)]

    def decide(self, region: Bag, parent_bag: Bag) -> int:
        key = (region, parent_bag)
        if key in self.memo:
            return self.memo[key][0]
        self.memo[key] = (_INF, None)  # cycle guard; real cycles cannot occur
        best = _INF
        best_choice = None
        outside = self.g.vertices - region - parent_bag
        for bag in self._candidates(region | parent_bag):
            if bag == parent_bag:
                continue
            # Dropped parent-bag vertices may not neighbor the uncovered
            # part of the territory, else the star partition at this node
            # fails toward the root.
            rest = region - bag
            if any(self.g.neighbors(x) & rest for x in parent_bag - bag):
                continue
            if any(self.g.neighbors(x) & outside for x in rest):
                continue
            total = 1
            children = self._split(region, bag)
            ok = True
            for child in children:
                sub = self.decide(child, bag)
                if sub >= _INF:
                    ok = False
                    break
                total += sub
            if ok and total < best:
                best = total
                best_choice = (bag, tuple(children))
        self.memo[key] = (best, best_choice)
        return best

    def solve_root(self) -> Tuple[int, Optional[Tuple[Bag, Tuple[Bag, ...]]]]:
        best = _INF
        best_choice = None
        for bag in self._candidates(frozenset(self.g.vertices)):
            total = 1
            children = self._split(frozenset(self.g.vertices), bag)
            ok = True
            for child in children:
                sub = self.decide(child, bag)
                if sub >= _INF:
                    ok = False
                    break
                total += sub
            if ok and total < best:
                best = total
                best_choice = (bag, tuple(children))
        return best, best_choice

    def build_witness(self, root_choice: Tuple[Bag, Tuple[Bag, ...]]) -> Tuple[Graph, Dict[str, Bag]]:
        names: List[str] = []
        bags: Dict[str, Bag] = {}
        edges: List[Tuple[str, str]] = []

        def fresh(bag: Bag) -> str:
            name = f"t{len(names)}"
            names.append(name)
            bags[name] = bag
            return name

        def attach(node: str, bag: Bag, children: Tuple[Bag, ...]) -> None:
            for child in children:
                _, choice = self.memo[(child, bag)]
                assert choice is not None
                child_bag, grandchildren = choice
                child_node = fresh(child_bag)
                edges.append((node, child_node))
                attach(child_node, child_bag, grandchildren)

        root_bag, children = root_choice
        root = fresh(root_bag)
        attach(root, root_bag, children)
        return make_graph(names, edges), bags


def vc_treewidth_exact(
    g: Graph, node_budget: int | None = None, max_exact: int = 8
) -> WidthResult:
    """Least vc-width over the normalized search family, with a witness.

    Raises GuardExceeded for graphs beyond the exact-size guard.  For a
    2-connected graph on 3 or more vertices the result is independently
    asserted to be at least 2 (a vc-width-1 tree would exhibit a vertex
    cut of size one).
    """
    if not g.is_connected():
        raise ValueError("graph must be connected")
    if g.n > max_exact:
        raise GuardExceeded(f"{g.n} vertices exceeds the exact guard ({max_exact})")
    budget = g.n if node_budget is None else node_budget
    for width in range(1, g.n + 1):
        search = _TreeSearch(g, width)
        count, choice = search.solve_root()
        if count <= budget and choice is not None:
            tree, bags = search.build_witness(choice)
            witness = VertexCutTree(tree, bags, g)
            report = validate_vctree(witness)
            assert report.ok, f"solver produced an invalid witness: {report.violation}"
            if is_two_connected(g):
                assert width >= 2, "a 2-connected graph admitted vc-width 1"
            return WidthResult(width, witness, "exact", EXACT_FAMILY_NOTE, nodes=count)
    raise AssertionError("the trivial single-bag tree was not found")


def vc_pathwidth_exact(
    g: Graph, node_budget: int | None = None, max_exact: int = 8
) -> WidthResult:
    """Least vc-width over vertex-cut paths in the normalized family."""
    if not g.is_connected():
        raise ValueError("graph must be connected")
    if g.n > max_exact:
        raise GuardExceeded(f"{g.n} vertices exceeds the exact guard ({max_exact})")
    budget = g.n if node_budget is None else node_budget
    all_vertices = frozenset(g.vertices)
    for width in range(1, g.n + 1):
        start_bags = []
        for size in range(1, width + 1):
            for combo in itertools.combinations(sorted(g.vertices), size):
                start_bags.append(frozenset(combo))
        # Breadth-first over (covered, last bag); layers are path lengths.
        parents: Dict[Tuple[Bag, Bag], Optional[Tuple[Bag, Bag]]] = {}
        order: List[Tuple[Bag, Bag]] = []
        for bag in start_bags:
            state = (bag, bag)
            if state not in parents:
                parents[state] = None
                order.append(state)
        found: Optional[Tuple[Bag, Bag]] = None
        length = 1
        current = order
        while current and length <= budget and found is None:
            for state in current:
                covered, _ = state
                if covered == all_vertices:
                    found = state
                    break
            if found is not None:
                break
            nxt: List[Tuple[Bag, Bag]] = []
            for state in current:
                covered, last = state
                # The node holding `last` becomes interior once extended:
                # nothing already covered and dropped may touch the rest.
                left = covered - last
                right = all_vertices - covered
                if any(g.neighbors(x) & right for x in left):
                    continue
                pool = sorted(right | last)
                for size in range(1, width + 1):
                    for combo in itertools.combinations(pool, size):
                        bag = frozenset(combo)
                        if bag == last:
                            continue
                        new_state = (covered | bag, bag)
                        if new_state not in parents:
                            parents[new_state] = state
                            nxt.append(new_state)
            current = nxt
            length += 1
        if found is not None:
            chain: List[Bag] = []
            cursor: Optional[Tuple[Bag, Bag]] = found
            while cursor is not None:
                chain.append(cursor[1])
                cursor = parents[cursor]
            chain.reverse()
            names = [f"z{i}" for i in range(len(chain))]
            tree = path_graph(names) if len(names) > 1 else make_graph(names, [])
            bags = {names[i]: chain[i] for i in range(len(chain))}
            witness = VertexCutTree(tree, bags, g)
            report = validate_vctree(witness)
            assert report.ok, f"solver produced an invalid witness: {report.violation}"
            return WidthResult(width, witness, "exact", EXACT_FAMILY_NOTE, nodes=len(chain))
    raise AssertionError("the trivial single-bag path was not found")


def min_fill_tree_decomposition(g: Graph) -> GraphTreeDecomposition:
    """Tree decomposition from the min-fill elimination heuristic.

    Ties are broken by vertex label; nodes whose bag is contained in a
    neighboring bag are spliced out.
    """
    if not g.is_connected():
        raise ValueError("graph must be connected")
    adj: Dict[str, set] = {v: set(g.neighbors(v)) for v in g.vertices}
    order: List[str] = []
    elim_bags: List[Bag] = []
    while adj:
        best_v = None
        best_fill = None
        for v in sorted(adj):
            nbrs = sorted(adj[v])
            fill = sum(
                1
                for i in range(len(nbrs))
                for j in range(i + 1, len(nbrs))
                if nbrs[j] not in adj[nbrs[i]]
            )
            if best_fill is None or fill < best_fill:
                best_fill = fill
                best_v = v
        assert best_v is not None
        nbrs = sorted(adj[best_v])
        elim_bags.append(frozenset([best_v, *nbrs]))
        order.append(best_v)
        for i in range(len(nbrs)):
            for j in range(i + 1, len(nbrs)):
                adj[nbrs[i]].add(nbrs[j])
                adj[nbrs[j]].add(nbrs[i])
        for u in nbrs:
            adj[u].discard(best_v)
        del adj[best_v]

    position = {v: i for i, v in enumerate(order)}
    names = [f"b{i}" for i in range(len(elim_bags))]
    edges: List[Tuple[str, str]] = []
    for i, bag in enumerate(elim_bags):
        rest = [u for u in bag if u != order[i]]
        if rest:
            parent = min(position[u] for u in rest)
            edges.append((names[i], names[parent]))
        elif i + 1 < len(elim_bags):
            edges.append((names[i], names[i + 1]))
    tree = make_graph(names, edges)
    bags = {names[i]: elim_bags[i] for i in range(len(elim_bags))}
    tree, bags = _prune_contained_bags(tree, bags)
    return GraphTreeDecomposition(tree, bags, g)


def _prune_contained_bags(tree: Graph, bags: Dict[str, Bag]) -> Tuple[Graph, Dict[str, Bag]]:
    changed = True
    while changed and len(bags) > 1:
        changed = False
        for node in sorted(bags):
            absorber = next(
                (nb for nb in sorted(tree.neighbors(node)) if bags[node] <= bags[nb]), None
            )
            if absorber is not None:
                others = [nb for nb in tree.neighbors(node) if nb != absorber]
                new_edges = {e for e in tree.edges if node not in e}
                new_edges |= {norm_edge(absorber, nb) for nb in others}
                tree = Graph(tree.vertices - {node}, frozenset(new_edges))
                del bags[node]
                changed = True
                break
    return tree, bags


def vc_treewidth_upper(g: Graph) -> WidthResult:
    """Upper bound: the min-fill tree decomposition read as a vertex-cut
    tree (vc-width = width + 1)."""
    td = min_fill_tree_decomposition(g)
    vct = td_as_vctree(td)
    value = vc_width(vct, validate=False)
    assert value == td.width() + 1
    return WidthResult(value, vct, "upper-bound", "min-fill heuristic", nodes=len(vct.bags))
