"""Graphical realizations of linear codes and exact lower bounds on their
constraint complexity."""

from .codes import (
    LinearCode,
    canonicalize,
    cross_section,
    direct_sum,
    minimum_distance,
    project,
)
from .cut_bounds import (
    CutBoundResult,
    edge_cut_rhs,
    kappa_lower_from_cuts,
    lp_kappa_plus_lower_bound,
    star_tree_model,
    vertex_cut_rhs,
    vertex_deletion_bound,
)
from .graphs import Graph, StarPartition, delete_edges, delete_vertices, spanning_tree
from .guards import GuardExceeded
from .lower_bounds import (
    LowerBoundCertificate,
    corollary_bounds,
    nkd_tree_complexity_bound,
    node_bounds,
    vctree_lower_bound,
)
from .min_tree import (
    build_minimal,
    dim_constraint,
    dim_state,
    extend_via_spanning_tree,
    kappa_of_tree_decomp,
    kappa_path_exact,
    kappa_tree_exact,
)
from .realizations import (
    ComplexityReport,
    GraphDecomposition,
    GraphicalModel,
    build_star,
    essentialize,
    full_behavior,
    measure,
    verify_realization,
)
from .vctrees import (
    GraphTreeDecomposition,
    VertexCutTree,
    WidthResult,
    td_as_vctree,
    validate_tree_decomposition,
    validate_vctree,
    vc_pathwidth_exact,
    vc_treewidth_exact,
    vc_treewidth_upper,
    vc_width,
)

__version__ = "0.1.0"
