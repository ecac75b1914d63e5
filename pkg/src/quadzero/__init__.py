"""Zeros of the two-parameter harmonic quadrinomial family
q(z) = b*z^k + conj(z)^n + c*conj(z)^m + z.
"""

from .bounds import (
    BoundSource,
    CountBound,
    CountBranch,
    DiskBound,
    count_bound,
    radius_bound,
    radius_polynomial,
)
from .contour import Circle, Rectangle, WindingReport, winding_number
from .critical import (
    CriticalCircle,
    CriticalCircleReport,
    b0_orientation_inequality,
    circle_image,
    critical_radius,
    critical_radius_alt,
    modular_root_census,
    pure_imaginary_rays,
    univalence_radius,
    verify_theorem_34,
)
from .model import (
    HarmonicQuadrinomial,
    OrientationClass,
    analytic_derivative,
    classify_point,
    coanalytic_derivative,
    dilatation,
    evaluate,
    jacobian,
)
from .realroots import (
    PositiveRoot,
    RealPoly,
    deflate_at_one,
    positive_root_bracketed,
    sign_changes,
)
from .solver import (
    SolveConfig,
    ZeroRecord,
    ZeroSetReport,
    count_zeros,
    find_zeros,
    newton_step,
    real_system,
)
from .sweep import Axis, SweepCell, SweepGrid, run_sweep, sweep_csv_lines

__all__ = [
    "Axis",
    "BoundSource",
    "Circle",
    "CountBound",
    "CountBranch",
    "CriticalCircle",
    "CriticalCircleReport",
    "DiskBound",
    "HarmonicQuadrinomial",
    "OrientationClass",
    "PositiveRoot",
    "RealPoly",
    "Rectangle",
    "SolveConfig",
    "SweepCell",
    "SweepGrid",
    "WindingReport",
    "ZeroRecord",
    "ZeroSetReport",
    "analytic_derivative",
    "b0_orientation_inequality",
    "circle_image",
    "classify_point",
    "coanalytic_derivative",
    "count_bound",
    "count_zeros",
    "critical_radius",
    "critical_radius_alt",
    "deflate_at_one",
    "dilatation",
    "evaluate",
    "find_zeros",
    "jacobian",
    "modular_root_census",
    "newton_step",
    "positive_root_bracketed",
    "pure_imaginary_rays",
    "radius_bound",
    "radius_polynomial",
    "real_system",
    "run_sweep",
    "sign_changes",
    "sweep_csv_lines",
    "univalence_radius",
    "verify_theorem_34",
    "winding_number",
]

__version__ = "0.1.0"
