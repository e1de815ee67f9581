"""Exponential Hermite splines with exact ellipse reproduction.

Evaluation of the cardinal generator pair, Green's-function identities,
Riesz-stability verification, Hermite/Bezier conversion, non-stationary
vector and scalar subdivision, and closed-curve modelling with SVG export.
"""

from .basis import (
    E4Piece,
    GeneratorPair,
    HermiteData,
    make_generators,
    phi,
    phi_deriv,
    phi_rescaled,
    phi_rescaled_deriv,
    spline_eval,
)
from .bezier import (
    BernsteinBasis,
    BezierSegment,
    bernstein,
    bernstein_basis,
    bezier_to_hermite,
    conversion_ratio,
    endpoint_slope,
    hermite_to_bezier,
)
from .curve import ClosedHermiteCurve, reproduction_check, unit_circle
from .document import (
    CurveDocument,
    DocumentFormatError,
    dumps_document,
    loads_document,
    refined_document,
    render_svg,
)
from .frequency import DomainError, Frequency, FrequencyList, SMALL_FREQ_THRESHOLD
from .gram import (
    GramEntries,
    GramMatrix,
    det_scan_min,
    gram_entries,
    gram_matrix,
    lower_bound_G,
    lower_bound_G_zero_limit,
    riesz_bounds,
)
from .greens import (
    GreenPair,
    annihilate,
    annihilation_weights,
    bspline,
    phi_from_rho,
    rho,
    rho_from_phi,
)
from .subdivision import (
    MaskTriple,
    ScalarControl,
    hermite_to_scalar,
    masks,
    refinement_mask_general,
    refine_step,
    scalar_conversion,
    scalar_conversion_inverse,
    scalar_refine_step,
    scalar_to_hermite,
    subdivide,
)

__version__ = "0.1.0"

__all__ = [
    "BernsteinBasis",
    "BezierSegment",
    "ClosedHermiteCurve",
    "CurveDocument",
    "DocumentFormatError",
    "DomainError",
    "E4Piece",
    "Frequency",
    "FrequencyList",
    "GeneratorPair",
    "GramEntries",
    "GreenPair",
    "GramMatrix",
    "HermiteData",
    "MaskTriple",
    "SMALL_FREQ_THRESHOLD",
    "ScalarControl",
    "annihilate",
    "annihilation_weights",
    "bernstein",
    "bernstein_basis",
    "bezier_to_hermite",
    "bspline",
    "conversion_ratio",
    "det_scan_min",
    "dumps_document",
    "endpoint_slope",
    "gram_entries",
    "gram_matrix",
    "hermite_to_bezier",
    "hermite_to_scalar",
    "loads_document",
    "lower_bound_G",
    "lower_bound_G_zero_limit",
    "make_generators",
    "masks",
    "phi",
    "phi_deriv",
    "phi_from_rho",
    "phi_rescaled",
    "phi_rescaled_deriv",
    "refine_step",
    "refined_document",
    "refinement_mask_general",
    "render_svg",
    "reproduction_check",
    "rho",
    "rho_from_phi",
    "riesz_bounds",
    "scalar_conversion",
    "scalar_conversion_inverse",
    "scalar_refine_step",
    "scalar_to_hermite",
    "spline_eval",
    "subdivide",
    "unit_circle",
]
