"""Bounds and exact values for the dimension of bivariate spline spaces C^r_k."""

__version__ = "0.1.0"

from .bounds import (
    VertexTerm,
    binom2,
    lower_bound_hom,
    omega_a_b,
    schumaker_lower,
    schumaker_upper,
    upper_bound_hom,
    vertex_term_hom,
    vertex_term_sch,
)
from .mesh import EdgeForm, MeshError, Point2, Triangulation, edge_form, parse_triangulation, slope_count, validate_disk
from .oracle import fatpoint_quotient_dim, homology_defect, spline_dimension
from .ordering import (
    exactness_certificate,
    find_certified_ordering,
    find_schumaker_ordering,
    is_schumaker_ordering,
    lemma_order,
    minimize_upper_bound,
    tilde_slope_counts,
)
from .refine import ps6_dimension_formula, ps6_split, ps12_split
from .report import BoundReport, bound_report
