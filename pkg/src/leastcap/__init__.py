"""Least capacity point and inner radius of triangles.

Exact elliptic-function engines handle the isosceles right and 30-60-90
triangles; a Schwarz-Christoffel map handles every other triangle.
"""

__version__ = "0.1.0"

from .capacity import (  # noqa: E402
    Backend,
    CapacityReport,
    FigureGeometry,
    Query,
    figure_geometry,
    least_capacity_point,
    preset_triangle,
    radius_at,
)
from .errors import BoundaryError, ConvergenceError, DomainError, LeastCapError, PoleError  # noqa: E402
from .geometry import Similarity, Triangle  # noqa: E402
from .kernels import BACKEND as KERNEL_BACKEND  # noqa: E402
from .optimize import OptimizerConfig, Optimum  # noqa: E402
from .scmap import SCMap, inner_radius_sc, sc_build  # noqa: E402

__all__ = [
    "Backend",
    "BoundaryError",
    "CapacityReport",
    "ConvergenceError",
    "DomainError",
    "FigureGeometry",
    "KERNEL_BACKEND",
    "LeastCapError",
    "OptimizerConfig",
    "Optimum",
    "PoleError",
    "Query",
    "SCMap",
    "Similarity",
    "Triangle",
    "figure_geometry",
    "inner_radius_sc",
    "least_capacity_point",
    "preset_triangle",
    "radius_at",
    "sc_build",
]
