"""Fermat point of a triangle: closed-form solver, certificates and oracles."""

from .geometry import (
    Circle,
    Classification,
    Kind,
    Point2,
    Triangle,
    UnitVec2,
    Vec2,
    angle_at,
    circle_circle_intersection,
    classify,
    signed_area2,
)
from .objective import (
    finite_difference_gradient,
    gradient,
    total_distance,
    unit_vector_residual,
    vertex_optimality_margin,
)
from .oracle import OracleReport, grid_refine_minimize, weiszfeld
from .solver import (
    Diagnostics,
    SolverConfig,
    SolverResult,
    fermat_point,
    isogonic_point,
    torricelli_circle,
)

__all__ = [
    "Circle",
    "Classification",
    "Diagnostics",
    "Kind",
    "OracleReport",
    "Point2",
    "SolverConfig",
    "SolverResult",
    "Triangle",
    "UnitVec2",
    "Vec2",
    "angle_at",
    "circle_circle_intersection",
    "classify",
    "fermat_point",
    "finite_difference_gradient",
    "gradient",
    "grid_refine_minimize",
    "isogonic_point",
    "signed_area2",
    "torricelli_circle",
    "total_distance",
    "unit_vector_residual",
    "vertex_optimality_margin",
    "weiszfeld",
]
