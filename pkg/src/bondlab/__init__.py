"""Exact graph-domination laboratory.

Computes domination and bondage numbers, rotation-system surface
embeddings and minimum genera, per-edge curvature identities in exact
rational arithmetic, and every genus-based upper bound on the bondage
number, for simple graphs on up to 64 vertices.
"""

from .bondage import BondageResult, HrBound, bondage_number, bondage_oracle, degree_bound, hr_bound
from .bounds import BoundSuite, SachsBounds, bound_suite, sachs_bounds, surface_bounds
from .curvature import (
    CaseBound,
    CurvatureReport,
    EdgeCurvature,
    SurfaceSpec,
    case_bound,
    check_euler_identities,
    curvature_table,
    improved_constant,
    paper_case_formulas,
)
from .domination import DominationResult, domination_number, gamma_oracle, is_dominating_set
from .embedding import (
    EmbeddingSummary,
    FaceTrace,
    GenusBudget,
    RotationSystem,
    embedding_summary,
    flip_vertex,
    is_orientable_embedding,
    min_genus,
    parse_embedding,
    rotation_system,
    trace_faces,
    validate_embedding,
    write_embedding,
)
from .families import FamilySpec, generate
from .graph6 import parse_edge_list, parse_graph6, parse_graph_text, write_edge_list, write_graph6
from .graphs import (
    Graph,
    build_graph,
    common_neighbors,
    connected_components,
    degree_stats,
    is_connected,
    remove_edges,
)
from .survey import SurveyRow, run_survey

__all__ = [name for name in dir() if not name.startswith("_")]
