"""Fermat-Torricelli points and loci in two-dimensional normed planes."""

from .angles import AngleQuery, is_absorbing, is_critical, is_floating_deg3, is_pointed
from .certificates import (
    ABSORBING,
    FLOATING,
    Certificate,
    select_functionals,
    verify_certificate,
)
from .classify import (
    ClassificationReport,
    DoubleCluster,
    PseudoDoubleCluster,
    classify_instance,
    detect_double_cluster,
    detect_pseudo_double_cluster,
    reflection_condition,
)
from .engine import (
    FTResult,
    d_collinear_analyze,
    d_segment,
    ft_locus,
    ft_objective,
    ft_point,
    weiszfeld,
)
from .errors import FtlocusError
from .geometry import ConvexRegion, Halfplane, Vec, convex_hull
from .norms import PolyNorm, SmoothNorm, euclidean
from .oracle import RandomInstance, brute_force_min, run_suite
from .rational import Rat, parse_rational, rat
from .svg import Scene, render_svg

__version__ = "0.1.0"

__all__ = [
    "ABSORBING",
    "AngleQuery",
    "Certificate",
    "ClassificationReport",
    "ConvexRegion",
    "DoubleCluster",
    "FLOATING",
    "FTResult",
    "FtlocusError",
    "Halfplane",
    "PolyNorm",
    "PseudoDoubleCluster",
    "RandomInstance",
    "Rat",
    "Scene",
    "SmoothNorm",
    "Vec",
    "brute_force_min",
    "classify_instance",
    "convex_hull",
    "d_collinear_analyze",
    "d_segment",
    "detect_double_cluster",
    "detect_pseudo_double_cluster",
    "euclidean",
    "ft_locus",
    "ft_objective",
    "ft_point",
    "is_absorbing",
    "is_critical",
    "is_floating_deg3",
    "is_pointed",
    "parse_rational",
    "rat",
    "reflection_condition",
    "render_svg",
    "run_suite",
    "select_functionals",
    "verify_certificate",
    "weiszfeld",
    "__version__",
]
