"""Unicritical Blaschke products: classification, parameter sets, Julia sets.

The family B_w(z) = ((z - w)/(1 - conj(w) z))^n, |w| < 1, n >= 2, is the
disk analogue of the unicritical polynomials z^n + c.  This package
classifies each map as elliptic, parabolic or hyperbolic, computes the
elliptic parameter set and the connectedness locus, normalizes arbitrary
unicritical finite Blaschke products to this one-parameter form, samples
Julia sets on the circle, and renders parameter- and dynamical-plane
pictures deterministically.
"""

from .ellipticity import (
    CircleArc,
    RayClassification,
    RayKind,
    arc_length,
    arc_length_rate,
    classify,
    contracting_arc,
    endpoint_cos,
    endpoint_displacement,
    image_arc_length,
    image_arc_length_rate,
    image_endpoint_cos,
    in_connectedness_locus,
    in_connectedness_locus_full_disk,
    in_elliptic_set,
    in_elliptic_set_full_disk,
    inner_radius,
    is_always_elliptic_angle,
    is_fixed_antipode_angle,
    ray_threshold,
    zero_step_parameter,
)
from .errors import InconclusiveError, NumericError
from .julia import (
    JuliaSample,
    JuliaType,
    backward_orbit,
    fatou_gap,
    hyperbolic_step_kind,
    julia_type,
    median_gap,
    write_angles_csv,
)
from .mobius import DiskMobius, MobiusClass, in_ellipticity_domain
from .normalize import (
    FiniteBlaschke,
    NormalizationResult,
    conjugate,
    critical_points,
    normalize,
    preimages,
)
from .products import (
    BlaschkeClass,
    DynamicsClass,
    OrbitLocation,
    StepKind,
    UnicriticalBlaschke,
    denjoy_wolff_iterate,
    hyperbolic_distance,
    hyperbolic_step_sequence,
)
from .render import (
    CurveTable,
    RasterImage,
    boundary_curve,
    render_julia_circle,
    render_parameter_plane,
    write_csv,
    write_ppm,
)

__all__ = [
    "BlaschkeClass",
    "CircleArc",
    "CurveTable",
    "DiskMobius",
    "DynamicsClass",
    "FiniteBlaschke",
    "InconclusiveError",
    "JuliaSample",
    "JuliaType",
    "MobiusClass",
    "NormalizationResult",
    "NumericError",
    "OrbitLocation",
    "RasterImage",
    "RayClassification",
    "RayKind",
    "StepKind",
    "UnicriticalBlaschke",
    "arc_length",
    "arc_length_rate",
    "backward_orbit",
    "boundary_curve",
    "classify",
    "conjugate",
    "contracting_arc",
    "critical_points",
    "denjoy_wolff_iterate",
    "endpoint_cos",
    "endpoint_displacement",
    "fatou_gap",
    "hyperbolic_distance",
    "hyperbolic_step_kind",
    "hyperbolic_step_sequence",
    "image_arc_length",
    "image_arc_length_rate",
    "image_endpoint_cos",
    "in_connectedness_locus",
    "in_connectedness_locus_full_disk",
    "in_elliptic_set",
    "in_elliptic_set_full_disk",
    "in_ellipticity_domain",
    "inner_radius",
    "is_always_elliptic_angle",
    "is_fixed_antipode_angle",
    "julia_type",
    "median_gap",
    "normalize",
    "preimages",
    "ray_threshold",
    "render_julia_circle",
    "render_parameter_plane",
    "write_angles_csv",
    "write_csv",
    "write_ppm",
    "zero_step_parameter",
]

__version__ = "0.1.0"
