"""Undirected simple graphs, trees, cuts and the small enumerations.

Vertices are string labels.  Edges are stored as sorted label pairs.
No self-loops or parallel edges; connectivity is checked where an
operation requires it.  All enumeration orders are lexicographic so
results are reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, List, Sequence, Tuple

from .guards import GuardExceeded

Edge = Tuple[str, str]


def norm_edge(u: str, v: str) -> Edge:
    if u == v:
        raise ValueError(f"self-loop at {u!r}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    vertices: FrozenSet[str]
    edges: FrozenSet[Edge]

    def __post_init__(self):
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at {u!r}")
            if u > v:
                raise ValueError(f"edge {(u, v)} is not normalized")
            if u not in self.vertices or v not in self.vertices:
                raise ValueError(f"edge {(u, v)} uses an unknown vertex")

    @property
    def n(self) -> int:
        return len(self.vertices)

    def neighbors(self, v: str) -> FrozenSet[str]:
        if v not in self.vertices:
            raise KeyError(f"unknown vertex {v!r}")
        return frozenset(b if a == v else a for a, b in self.edges if v in (a, b))

    def neighborhood(self, W: Iterable[str]) -> FrozenSet[str]:
        """N(W): all vertices adjacent to some vertex of W."""
        out: set[str] = set()
        for v in W:
            out |= self.neighbors(v)
        return frozenset(out)

    def has_edge(self, u: str, v: str) -> bool:
        return norm_edge(u, v) in self.edges

    def degree(self, v: str) -> int:
        return len(self.neighbors(v))

    def incident_edges(self, v: str) -> Tuple[Edge, ...]:
        return tuple(sorted(e for e in self.edges if v in e))

    def is_connected(self) -> bool:
        return len(components(self.vertices, self.edges)) <= 1

    def is_tree(self) -> bool:
        return self.is_connected() and len(self.edges) == len(self.vertices) - 1

    def induced(self, W: Iterable[str]) -> "Graph":
        keep = frozenset(W)
        unknown = keep - self.vertices
        if unknown:
            raise KeyError(f"unknown vertices: {sorted(unknown)}")
        return Graph(keep, frozenset(e for e in self.edges if e[0] in keep and e[1] in keep))


def make_graph(vertices: Iterable[str], edges: Iterable[Sequence[str]]) -> Graph:
    vs = frozenset(str(v) for v in vertices)
    seen: set[Edge] = set()
    for pair in edges:
        u, v = pair
        e = norm_edge(str(u), str(v))
        if e in seen:
            raise ValueError(f"parallel edge {e}")
        seen.add(e)
    return Graph(vs, frozenset(seen))


def components(vertices: Iterable[str], edges: Iterable[Edge]) -> List[FrozenSet[str]]:
    """Connected components, sorted by their least vertex label."""
    adj: Dict[str, set] = {v: set() for v in vertices}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    seen: set[str] = set()
    out: List[FrozenSet[str]] = []
    for start in sorted(adj):
        if start in seen:
            continue
        stack = [start]
        comp = set()
        while stack:
            x = stack.pop()
            if x in seen:
                continue
            seen.add(x)
            comp.add(x)
            stack.extend(adj[x] - seen)
        out.append(frozenset(comp))
    return sorted(out, key=min)


def delete_vertices(g: Graph, W: Iterable[str]) -> Tuple[Graph, List[FrozenSet[str]]]:
    """G - W together with the components of the result.

    W is a vertex cut of G exactly when the result has two or more
    components.
    """
    cut = frozenset(W)
    unknown = cut - g.vertices
    if unknown:
        raise KeyError(f"unknown vertices: {sorted(unknown)}")
    rest = g.vertices - cut
    kept = frozenset(e for e in g.edges if e[0] in rest and e[1] in rest)
    sub = Graph(rest, kept)
    return sub, components(rest, kept)


def delete_edges(g: Graph, X: Iterable[Sequence[str]]) -> Tuple[Graph, List[FrozenSet[str]]]:
    """G with the edges X removed, together with the resulting components."""
    cut = frozenset(norm_edge(u, v) for u, v in X)
    unknown = cut - g.edges
    if unknown:
        raise KeyError(f"unknown edges: {sorted(unknown)}")
    kept = g.edges - cut
    sub = Graph(g.vertices, kept)
    return sub, components(g.vertices, kept)


@dataclass(frozen=True)
class StarPartition:
    """A partition (V0, V1, ..., Vd) where each part's outside neighbors lie in V0.

    Empty parts are allowed.
    """

    v0: FrozenSet[str]
    parts: Tuple[FrozenSet[str], ...]


@dataclass(frozen=True)
class StarPartitionReport:
    ok: bool
    violation: str | None = None


def validate_star_partition(g: Graph, sp: StarPartition) -> StarPartitionReport:
    """Check the partition property and the neighborhood condition.

    The report names the first violation found: either a vertex that is
    missing/repeated, or (part index, vertex, neighbor) for a neighbor
    escaping to a part other than V0.
    """
    blocks = [sp.v0, *sp.parts]
    seen: Dict[str, int] = {}
    for i, block in enumerate(blocks):
        for v in sorted(block):
            if v not in g.vertices:
                return StarPartitionReport(False, f"unknown vertex {v!r} in block {i}")
            if v in seen:
                return StarPartitionReport(False, f"vertex {v!r} appears in blocks {seen[v]} and {i}")
            seen[v] = i
    missing = g.vertices - set(seen)
    if missing:
        return StarPartitionReport(False, f"vertex {min(missing)!r} is not covered")
    for i, part in enumerate(sp.parts, start=1):
        for v in sorted(part):
            for u in sorted(g.neighbors(v)):
                if u not in part and u not in sp.v0:
                    return StarPartitionReport(
                        False, f"part {i}: vertex {v!r} has neighbor {u!r} outside the part and V0"
                    )
    return StarPartitionReport(True)


def star_partition_from_cut(g: Graph, W: Iterable[str]) -> StarPartition:
    """The star partition induced by deleting W: one part per component."""
    cut = frozenset(W)
    _, comps = delete_vertices(g, cut)
    return StarPartition(v0=cut, parts=tuple(comps))


def spanning_tree(g: Graph) -> Graph:
    """Deterministic spanning tree: breadth-first from the least vertex,
    visiting neighbors in sorted order."""
    if not g.vertices:
        raise ValueError("empty graph")
    if not g.is_connected():
        raise ValueError("graph is not connected")
    root = min(g.vertices)
    seen = {root}
    queue = [root]
    tree_edges: set[Edge] = set()
    while queue:
        v = queue.pop(0)
        for u in sorted(g.neighbors(v)):
            if u not in seen:
                seen.add(u)
                tree_edges.add(norm_edge(v, u))
                queue.append(u)
    return Graph(g.vertices, frozenset(tree_edges))


def path_graph(vertices: Sequence[str]) -> Graph:
    vs = [str(v) for v in vertices]
    return make_graph(vs, [(vs[i], vs[i + 1]) for i in range(len(vs) - 1)])


def cycle_graph(vertices: Sequence[str]) -> Graph:
    vs = [str(v) for v in vertices]
    if len(vs) < 3:
        raise ValueError("a simple cycle needs at least 3 vertices")
    edges = [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]
    return make_graph(vs, edges)


def star_graph(hub: str, leaves: Sequence[str]) -> Graph:
    return make_graph([hub, *leaves], [(hub, leaf) for leaf in leaves])


def double_factorial(m: int) -> int:
    out = 1
    while m > 1:
        out *= m
        m -= 2
    return out


def enumerate_cubic_trees(
    n_leaves: int, max_n: int = 10
) -> Iterator[Tuple[Graph, Tuple[str, ...]]]:
    """All leaf-labeled cubic trees with n labeled leaves, each exactly once.

    Yields (tree, leaves) where leaves[i] is the vertex carrying label
    position i.  The count is (2n-5)!!; trees are produced by inserting
    leaf i into every edge of each smaller tree, in sorted edge order.
    """
    if n_leaves < 3:
        raise ValueError("cubic trees need at least 3 leaves")
    if n_leaves > max_n:
        raise GuardExceeded(f"{n_leaves} leaves exceeds the cubic-tree guard ({max_n})")

    leaf_names = tuple(f"x{i}" for i in range(n_leaves))

    def grow(edges: FrozenSet[Edge], next_leaf: int) -> Iterator[FrozenSet[Edge]]:
        if next_leaf == n_leaves:
            yield edges
            return
        new_leaf = leaf_names[next_leaf]
        new_internal = f"i{next_leaf - 2}"
        for u, v in sorted(edges):
            grown = (edges - {(u, v)}) | {
                norm_edge(u, new_internal),
                norm_edge(v, new_internal),
                norm_edge(new_leaf, new_internal),
            }
            yield from grow(grown, next_leaf + 1)

    base = frozenset(norm_edge("i0", leaf_names[i]) for i in range(3))
    for edges in grow(base, 3):
        verts = frozenset(itertools.chain.from_iterable(edges))
        yield Graph(verts, edges), leaf_names


def enumerate_path_orderings(n: int, max_n: int = 10) -> Iterator[Tuple[int, ...]]:
    """Each ordering of range(n), up to reversal, exactly once (n!/2 total)."""
    if n < 1:
        raise ValueError("need at least one coordinate")
    if n > max_n:
        raise GuardExceeded(f"{n} coordinates exceeds the ordering guard ({max_n})")
    if n == 1:
        yield (0,)
        return
    for perm in itertools.permutations(range(n)):
        if perm[0] < perm[-1]:
            yield perm


def graph_to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in sorted(g.vertices):
        lines.append(f'  "{v}";')
    for u, v in sorted(g.edges):
        lines.append(f'  "{u}" -- "{v}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
