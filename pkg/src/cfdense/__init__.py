"""Exact zero, total and connected forcing: solvers, density checks, tree
counting formulas and graph-operation predictions."""

from .graph import Graph, GraphError, VertexSet, boundary, connectivity_report, parse_graph, render_graph
from .families import FamilySpec, generate_family
from .operations import cartesian_product, corona, join
from .forcing import Chronology, ForcingError, classify_set, forcing_closure, reverse_chronology
from .solvers import (
    SolverError,
    UniquenessViolation,
    count_cf_sets,
    count_profile,
    density,
    enumerate_minimum_sets,
    extremal_cf_counts,
    forcing_number,
    uniqueness_scan,
)
from .trees import (
    CappedCompositionSpec,
    all_but_one_count,
    capped_compositions,
    composition_count,
    enumerate_m_sets,
    is_cf_dense_tree,
    path_count,
    pendant_decomposition,
    spider_count,
    tree_count,
    tree_zc,
)
from .predictions import check_density_preservation, predict_operation

__version__ = "0.1.0"
