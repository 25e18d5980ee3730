"""JSON file formats for codes, graphs, index maps, vertex-cut trees and
realizations, plus DOT export.

All loaders validate eagerly and raise FileFormatError with a field
diagnostic; the CLI maps that to exit status 2.  Serialized realizations
store one state dimension per edge and one generator matrix per vertex
over a declared local index order, so a model round-trips bit-exactly
after state reduction.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Dict, List, Tuple

from .codes import LinearCode, canonicalize, permute_columns
from .graphs import Graph, graph_to_dot, make_graph, norm_edge
from .realizations import (
    GraphDecomposition,
    GraphicalModel,
    full_state_space,
    local_label_order,
    reduce_states,
)
from .vctrees import VertexCutTree


class FileFormatError(ValueError):
    pass


def _load_json(path: str | Path) -> Any:
    try:
        with open(path) as fh:
            return json.load(fh)
    except FileNotFoundError as exc:
        raise FileFormatError(f"{path}: file not found") from exc
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from exc


def _expect(obj: Any, key: str, kind, where: str):
    if not isinstance(obj, dict) or key not in obj:
        raise FileFormatError(f"{where}: missing field {key!r}")
    value = obj[key]
    if kind is not None and not isinstance(value, kind):
        raise FileFormatError(f"{where}: field {key!r} has the wrong type")
    return value


def load_code(path: str | Path) -> LinearCode:
    data = _load_json(path)
    where = str(path)
    q = _expect(data, "field", int, where)
    index_set = _expect(data, "index_set", list, where)
    generators = _expect(data, "generators", list, where)
    for row in generators:
        if not isinstance(row, list) or len(row) != len(index_set):
            raise FileFormatError(f"{where}: generator rows must have {len(index_set)} entries")
    try:
        return canonicalize(generators, [str(x) for x in index_set], q)
    except (ValueError, KeyError) as exc:
        raise FileFormatError(f"{where}: {exc}") from exc


def code_to_dict(code: LinearCode) -> Dict[str, Any]:
    return {
        "field": code.q,
        "index_set": list(code.index_set),
        "generators": [list(g) for g in code.generators],
    }


def load_graph(path: str | Path) -> Graph:
    data = _load_json(path)
    where = str(path)
    vertices = _expect(data, "vertices", list, where)
    edges = _expect(data, "edges", list, where)
    for e in edges:
        if not isinstance(e, list) or len(e) != 2:
            raise FileFormatError(f"{where}: edges must be two-element lists")
    try:
        return make_graph([str(v) for v in vertices], [(str(u), str(v)) for u, v in edges])
    except (ValueError, KeyError) as exc:
        raise FileFormatError(f"{where}: {exc}") from exc


def graph_to_dict(g: Graph) -> Dict[str, Any]:
    return {"vertices": sorted(g.vertices), "edges": [list(e) for e in sorted(g.edges)]}


def load_omega(path: str | Path) -> Dict[str, str]:
    data = _load_json(path)
    if isinstance(data, dict) and "omega" in data:
        data = data["omega"]
    if not isinstance(data, dict):
        raise FileFormatError(f"{path}: expected an object mapping labels to vertices")
    return {str(k): str(v) for k, v in data.items()}


def load_decomposition(code: LinearCode, graph: Graph, omega_path: str | Path) -> GraphDecomposition:
    omega = load_omega(omega_path)
    try:
        return GraphDecomposition(graph, code.index_set, omega)
    except (ValueError, KeyError) as exc:
        raise FileFormatError(f"{omega_path}: {exc}") from exc


def load_vctree(path: str | Path, target: Graph) -> VertexCutTree:
    data = _load_json(path)
    where = str(path)
    bags_raw = _expect(data, "bags", dict, where)
    edges = data.get("tree_edges", [])
    if not isinstance(edges, list):
        raise FileFormatError(f"{where}: tree_edges must be a list")
    nodes = set(bags_raw)
    for e in edges:
        if not isinstance(e, list) or len(e) != 2:
            raise FileFormatError(f"{where}: tree_edges entries must be pairs")
        nodes.update(map(str, e))
    try:
        tree = make_graph(sorted(nodes), [(str(u), str(v)) for u, v in edges])
        bags = {str(z): frozenset(str(v) for v in members) for z, members in bags_raw.items()}
        for z in tree.vertices:
            bags.setdefault(z, frozenset())
        return VertexCutTree(tree, bags, target)
    except (ValueError, KeyError) as exc:
        raise FileFormatError(f"{where}: {exc}") from exc


def vctree_to_dict(vct: VertexCutTree) -> Dict[str, Any]:
    return {
        "tree_edges": [list(e) for e in sorted(vct.tree.edges)],
        "bags": {z: sorted(vct.bags[z]) for z in sorted(vct.bags)},
    }


def load_vertex_cuts(path: str | Path) -> List[frozenset]:
    data = _load_json(path)
    cuts = _expect(data, "vertex_cuts", list, str(path))
    out = []
    for cut in cuts:
        if not isinstance(cut, list) or not cut:
            raise FileFormatError(f"{path}: vertex cuts must be nonempty lists")
        out.append(frozenset(str(v) for v in cut))
    return out


def load_edge_cuts(path: str | Path) -> List[List[Tuple[str, str]]]:
    data = _load_json(path)
    cuts = _expect(data, "edge_cuts", list, str(path))
    out = []
    for cut in cuts:
        if not isinstance(cut, list) or not cut:
            raise FileFormatError(f"{path}: edge cuts must be nonempty lists of edges")
        edges = []
        for e in cut:
            if not isinstance(e, list) or len(e) != 2:
                raise FileFormatError(f"{path}: edge cut entries must be pairs")
            edges.append((str(e[0]), str(e[1])))
        out.append(edges)
    return out


def realization_to_dict(model: GraphicalModel) -> Dict[str, Any]:
    reduced = reduce_states(model)
    decomp = reduced.decomposition
    return {
        "field": reduced.q,
        "index_set": list(decomp.index_set),
        "graph": graph_to_dict(decomp.graph),
        "omega": {lbl: decomp.omega[lbl] for lbl in decomp.index_set},
        "edges": [
            {"edge": list(e), "state_dim": reduced.state_spaces[e].dim}
            for e in sorted(reduced.state_spaces)
        ],
        "constraints": [
            {
                "vertex": v,
                "local_index_order": list(reduced.constraints[v].index_set),
                "generators": [list(g) for g in reduced.constraints[v].generators],
            }
            for v in sorted(reduced.constraints)
        ],
    }


def load_realization(path: str | Path) -> GraphicalModel:
    data = _load_json(path)
    where = str(path)
    q = _expect(data, "field", int, where)
    index_set = [str(x) for x in _expect(data, "index_set", list, where)]
    graph_data = _expect(data, "graph", dict, where)
    try:
        graph = make_graph(
            [str(v) for v in _expect(graph_data, "vertices", list, where)],
            [(str(u), str(v)) for u, v in _expect(graph_data, "edges", list, where)],
        )
        omega = {str(k): str(v) for k, v in _expect(data, "omega", dict, where).items()}
        decomp = GraphDecomposition(graph, tuple(index_set), omega)
        states = {}
        for entry in _expect(data, "edges", list, where):
            u, v = _expect(entry, "edge", list, where)
            e = norm_edge(str(u), str(v))
            states[e] = full_state_space(e, int(_expect(entry, "state_dim", int, where)), q)
        constraints = {}
        for entry in _expect(data, "constraints", list, where):
            v = str(_expect(entry, "vertex", None, where))
            declared = [str(x) for x in _expect(entry, "local_index_order", list, where)]
            gens = _expect(entry, "generators", list, where)
            raw = canonicalize(gens, declared, q)
            order = local_label_order(decomp, states, v)
            if set(declared) != set(order):
                raise FileFormatError(
                    f"{where}: constraint at {v!r} declares labels {declared}, expected {list(order)}"
                )
            constraints[v] = permute_columns(raw, order)
        return GraphicalModel(decomp, states, constraints)
    except FileFormatError:
        raise
    except (ValueError, KeyError) as exc:
        raise FileFormatError(f"{where}: {exc}") from exc


def dump_json(data: Any, path: str | Path) -> None:
    with open(path, "w") as fh:
        json.dump(data, fh, indent=2, sort_keys=True)
        fh.write("\n")


def dumps_report(data: Any) -> str:
    return json.dumps(data, indent=2, sort_keys=True)


def export_dot(g: Graph, name: str = "G") -> str:
    return graph_to_dot(g, name)
