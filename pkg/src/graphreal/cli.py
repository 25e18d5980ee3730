"""Command-line interface.

Every subcommand reads JSON inputs, runs exact computations and prints a
deterministic JSON report (keys sorted, two-space indent).  Exit status:
0 on success, 2 on validation failure, 3 when an enumeration guard is
exceeded.  The GRAPHREAL_GUARD_BITS environment variable overrides the
enumeration budget used by brute-force searches.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List

from . import files, fixtures
from .codes import minimum_distance
from .cut_bounds import (
    disconnecting_subsets,
    edge_cut_rhs,
    kappa_lower_from_cuts,
    lp_kappa_plus_lower_bound,
    vertex_deletion_bound,
)
from .graphs import delete_edges
from .guards import GuardExceeded
from .lower_bounds import nkd_tree_complexity_bound, vctree_lower_bound
from .min_tree import (
    dim_constraint,
    dim_state,
    kappa_path_exact,
    kappa_tree_exact,
)
from .realizations import measure, verify_realization
from .vctrees import vc_pathwidth_exact, vc_treewidth_exact, vc_treewidth_upper

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_GUARD = 3


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def _emit(report: Dict[str, Any], output: str | None) -> None:
    text = files.dumps_report(report)
    if output:
        Path(output).write_text(text + "\n")
    else:
        print(text)


def cmd_code_info(args) -> int:
    code = files.load_code(args.code)
    report: Dict[str, Any] = {"n": code.n, "k": code.dim, "field": code.q}
    if code.dim == 0:
        report["d"] = None
        report["note"] = "minimum distance undefined for the zero code"
    else:
        report["d"] = minimum_distance(code, args.guard_bits)
    _emit(report, args.output)
    return EXIT_OK


def cmd_min_tree(args) -> int:
    code = files.load_code(args.code)
    graph = files.load_graph(args.tree)
    decomp = files.load_decomposition(code, graph, args.omega)
    if not graph.is_tree():
        raise files.FileFormatError(f"{args.tree}: graph is not a tree")
    edge_dims = {f"{u}~{v}": dim_state(code, decomp, (u, v)) for u, v in sorted(graph.edges)}
    vertex_dims = {v: dim_constraint(code, decomp, v) for v in sorted(graph.vertices)}
    q = code.q
    report = {
        "state_dims": edge_dims,
        "constraint_dims": vertex_dims,
        "complexity": {
            "kappa": max(vertex_dims.values()),
            "kappa_plus": sum(vertex_dims.values()),
            "kappa_tot": sum(q**d for d in vertex_dims.values()),
            "sigma": max(edge_dims.values()) if edge_dims else 0,
            "sigma_plus": sum(edge_dims.values()),
            "sigma_tot": sum(q**d for d in edge_dims.values()),
        },
    }
    if args.dot:
        Path(args.dot).write_text(files.export_dot(graph, "T"))
    _emit(report, args.output)
    return EXIT_OK


def cmd_kappa_tree_exact(args) -> int:
    code = files.load_code(args.code)
    value, witness = kappa_tree_exact(code, max_n=args.max_n)
    report = {
        "kappa_tree": value,
        "witness": {
            "tree": files.graph_to_dict(witness.graph),
            "omega": {lbl: witness.omega[lbl] for lbl in witness.index_set},
        },
    }
    _emit(report, args.output)
    return EXIT_OK


def cmd_kappa_path_exact(args) -> int:
    code = files.load_code(args.code)
    value, ordering = kappa_path_exact(code, max_n=args.max_n)
    _emit({"kappa_path": value, "ordering": list(ordering)}, args.output)
    return EXIT_OK


def _load_cut_family(args, code, decomp) -> List[frozenset]:
    if args.cuts:
        return files.load_vertex_cuts(args.cuts)
    return disconnecting_subsets(decomp.graph, max_size=args.max_cut_size)


def cmd_bound_vertex_cut(args) -> int:
    code = files.load_code(args.code)
    graph = files.load_graph(args.graph)
    decomp = files.load_decomposition(code, graph, args.omega)
    cuts = _load_cut_family(args, code, decomp)
    entries = []
    for W in cuts:
        result = vertex_deletion_bound(code, decomp, W)
        entries.append({"cut": sorted(W), "rhs": result.rhs, "vacuous": result.vacuous})
    lp_value = lp_kappa_plus_lower_bound(code, decomp, cuts)
    report = {
        "bound_kind": "vertex-cut",
        "cuts": entries,
        "kappa_lower": kappa_lower_from_cuts(code, decomp, cuts) if cuts else 0,
        "kappa_plus_lower": _frac(lp_value),
    }
    _emit(report, args.output)
    return EXIT_OK


def cmd_bound_edge_cut(args) -> int:
    code = files.load_code(args.code)
    graph = files.load_graph(args.graph)
    decomp = files.load_decomposition(code, graph, args.omega)
    if not args.cuts:
        raise files.FileFormatError("edge-cut bounds need --cuts")
    entries = []
    for X in files.load_edge_cuts(args.cuts):
        _, comps = delete_edges(graph, X)
        if len(comps) < 2:
            raise files.FileFormatError(f"{args.cuts}: edge set {X} does not disconnect the graph")
        for comp in comps:
            rest = graph.vertices - comp
            result = edge_cut_rhs(code, decomp, (comp, rest), X)
            entries.append(
                {
                    "cut": [list(e) for e in sorted(result.cut)],
                    "side": sorted(comp),
                    "rhs": result.rhs,
                    "vacuous": result.vacuous,
                }
            )
    _emit({"bound_kind": "edge-cut", "cuts": entries}, args.output)
    return EXIT_OK


def cmd_bound_lp(args) -> int:
    code = files.load_code(args.code)
    graph = files.load_graph(args.graph)
    decomp = files.load_decomposition(code, graph, args.omega)
    cuts = _load_cut_family(args, code, decomp)
    value = lp_kappa_plus_lower_bound(code, decomp, cuts)
    report = {
        "bound_kind": "lp",
        "cut_count": len(cuts),
        "kappa_plus_lower": _frac(value),
        "kappa_plus_lower_ceil": -((-value.numerator) // value.denominator),
    }
    _emit(report, args.output)
    return EXIT_OK


def cmd_bound_theorem(args) -> int:
    code = files.load_code(args.code)
    graph = files.load_graph(args.graph)
    decomp = files.load_decomposition(code, graph, args.omega)
    vct = files.load_vctree(args.vctree, graph)
    cert = vctree_lower_bound(code, decomp, vct)
    report = {
        "bound_kind": "theorem",
        "bound": cert.bound,
        "vc_width": cert.vc_width,
        "node_bounds": dict(cert.node_bound_report.per_node),
        "max_node_bound": cert.node_bound_report.max_value,
        "argmax_node": cert.node_bound_report.argmax,
        "induced_complexity": cert.induced_complexity,
        "induced_omega": {
            lbl: cert.induced_decomposition.omega[lbl]
            for lbl in cert.induced_decomposition.index_set
        },
    }
    _emit(report, args.output)
    return EXIT_OK


def cmd_bound_nkd(args) -> int:
    report = nkd_tree_complexity_bound(args.n, args.k, args.d)
    _emit(
        {
            "bound_kind": "nkd",
            "n": report.n,
            "k": report.k,
            "d": report.d,
            "kappa_path_lower": _frac(report.path_bound),
            "kappa_path_lower_ceil": report.path_bound_int,
            "kappa_tree_lower_interval": [_frac(report.tree_bound_low), _frac(report.tree_bound_high)],
            "kappa_tree_lower_certified": report.tree_bound_int,
            "log2_bracket": [_frac(report.log2_low), _frac(report.log2_high)],
        },
        args.output,
    )
    return EXIT_OK


def cmd_vc_tree(args) -> int:
    graph = files.load_graph(args.graph)
    if args.upper:
        result = vc_treewidth_upper(graph)
    elif args.paths:
        result = vc_pathwidth_exact(graph, node_budget=args.node_budget, max_exact=args.max_exact)
    else:
        result = vc_treewidth_exact(graph, node_budget=args.node_budget, max_exact=args.max_exact)
    report = {
        "value": result.value,
        "certainty": result.certainty,
        "note": result.note,
        "nodes": result.nodes,
        "witness": files.vctree_to_dict(result.witness),
    }
    if args.dot:
        Path(args.dot).write_text(files.export_dot(graph, "G"))
    _emit(report, args.output)
    return EXIT_OK


def cmd_verify_realization(args) -> int:
    code = files.load_code(args.code)
    model = files.load_realization(args.realization)
    report = verify_realization(model, code, max_vars=args.max_vars)
    m = measure(model)
    _emit(
        {
            "ok": report.ok,
            "essential": report.essential,
            "symbols_match": report.symbols_match,
            "messages": list(report.messages),
            "complexity": {
                "kappa": m.kappa,
                "kappa_plus": m.kappa_plus,
                "kappa_tot": m.kappa_tot,
                "sigma": m.sigma,
                "sigma_plus": m.sigma_plus,
                "sigma_tot": m.sigma_tot,
            },
        },
        args.output,
    )
    return EXIT_OK if report.ok else EXIT_INVALID


def cmd_fixtures(args) -> int:
    catalog = []
    for fixture in fixtures.CATALOG:
        catalog.append(
            {"name": fixture.name, "description": fixture.description, "provenance": fixture.provenance}
        )
    if args.emit:
        out = Path(args.emit)
        out.mkdir(parents=True, exist_ok=True)
        for fixture in fixtures.CATALOG:
            bundle = fixture.build()
            base = out / fixture.name
            if "code" in bundle:
                files.dump_json(files.code_to_dict(bundle["code"]), f"{base}.code.json")
            if "graph" in bundle:
                files.dump_json(files.graph_to_dict(bundle["graph"]), f"{base}.graph.json")
            if "omega" in bundle:
                files.dump_json(bundle["omega"], f"{base}.omega.json")
            if "vctree" in bundle:
                tree, bags = bundle["vctree"]["tree"], bundle["vctree"]["bags"]
                files.dump_json(
                    {
                        "tree_edges": [list(e) for e in sorted(tree.edges)],
                        "bags": {z: sorted(bags[z]) for z in sorted(bags)},
                    },
                    f"{base}.vctree.json",
                )
            if "tree_decomposition" in bundle:
                tree = bundle["tree_decomposition"]["tree"]
                bags = bundle["tree_decomposition"]["bags"]
                files.dump_json(
                    {
                        "tree_edges": [list(e) for e in sorted(tree.edges)],
                        "bags": {z: sorted(bags[z]) for z in sorted(bags)},
                    },
                    f"{base}.td.json",
                )
            if "path_ordering" in bundle and bundle["path_ordering"]:
                files.dump_json({"ordering": bundle["path_ordering"]}, f"{base}.ordering.json")
            if "expected" in bundle:
                files.dump_json(bundle["expected"], f"{base}.expected.json")
    _emit({"fixtures": catalog}, args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphreal",
        description="Graphical realizations of linear codes: complexity measures and exact lower bounds",
    )
    parser.add_argument("--output", help="write the JSON report to a file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("code-info", help="length, dimension and minimum distance of a code")
    p.add_argument("--code", required=True)
    p.add_argument("--guard-bits", type=int, default=None)
    p.set_defaults(func=cmd_code_info)

    p = sub.add_parser("min-tree", help="minimal realization dimensions on a tree decomposition")
    p.add_argument("--code", required=True)
    p.add_argument("--tree", required=True)
    p.add_argument("--omega", required=True)
    p.add_argument("--dot", help="also write the tree in DOT format")
    p.set_defaults(func=cmd_min_tree)

    p = sub.add_parser("kappa-tree-exact", help="least tree complexity over cubic trees")
    p.add_argument("--code", required=True)
    p.add_argument("--max-n", type=int, default=10)
    p.set_defaults(func=cmd_kappa_tree_exact)

    p = sub.add_parser("kappa-path-exact", help="least path complexity over orderings")
    p.add_argument("--code", required=True)
    p.add_argument("--max-n", type=int, default=10)
    p.set_defaults(func=cmd_kappa_path_exact)

    bound = sub.add_parser("bound", help="cut-set and vertex-cut-tree lower bounds")
    bsub = bound.add_subparsers(dest="bound_kind", required=True)

    p = bsub.add_parser("vertex-cut")
    p.add_argument("--code", required=True)
    p.add_argument("--graph", required=True)
    p.add_argument("--omega", required=True)
    p.add_argument("--cuts")
    p.add_argument("--max-cut-size", type=int, default=2)
    p.set_defaults(func=cmd_bound_vertex_cut)

    p = bsub.add_parser("edge-cut")
    p.add_argument("--code", required=True)
    p.add_argument("--graph", required=True)
    p.add_argument("--omega", required=True)
    p.add_argument("--cuts", required=True)
    p.set_defaults(func=cmd_bound_edge_cut)

    p = bsub.add_parser("lp")
    p.add_argument("--code", required=True)
    p.add_argument("--graph", required=True)
    p.add_argument("--omega", required=True)
    p.add_argument("--cuts")
    p.add_argument("--max-cut-size", type=int, default=2)
    p.set_defaults(func=cmd_bound_lp)

    p = bsub.add_parser("theorem")
    p.add_argument("--code", required=True)
    p.add_argument("--graph", required=True)
    p.add_argument("--omega", required=True)
    p.add_argument("--vctree", required=True)
    p.set_defaults(func=cmd_bound_theorem)

    p = bsub.add_parser("nkd")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_bound_nkd)

    p = sub.add_parser("vc-tree", help="vc-treewidth: exact solver or min-fill upper bound")
    p.add_argument("--graph", required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", default=True)
    mode.add_argument("--upper", action="store_true")
    p.add_argument("--paths", action="store_true", help="restrict to vertex-cut paths")
    p.add_argument("--node-budget", type=int, default=None)
    p.add_argument("--max-exact", type=int, default=8)
    p.add_argument("--dot", help="also write the graph in DOT format")
    p.set_defaults(func=cmd_vc_tree)

    p = sub.add_parser("verify-realization", help="check a serialized model against a code")
    p.add_argument("--realization", required=True)
    p.add_argument("--code", required=True)
    p.add_argument("--max-vars", type=int, default=None)
    p.set_defaults(func=cmd_verify_realization)

    p = sub.add_parser("fixtures", help="list (and optionally emit) the named fixtures")
    p.add_argument("--emit", help="write fixture files into this directory")
    p.set_defaults(func=cmd_fixtures)

    return parser


def main(argv: List[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GuardExceeded as exc:
        print(files.dumps_report({"error": str(exc), "kind": "guard-exceeded"}), file=sys.stderr)
        return EXIT_GUARD
    except (files.FileFormatError, ValueError, KeyError) as exc:
        print(files.dumps_report({"error": str(exc), "kind": "validation"}), file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    raise SystemExit(main())
