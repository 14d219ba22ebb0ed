"""Branching curves of 4-manifold curvature tensors.

The library computes, for a pointwise Riemann curvature tensor in an
orthonormal frame, the bidegree-(4,4) curve in the product of two projective
lines cut out by the discriminant of the tangent-pencil equation, and tracks
its coefficients along closed-form shrinking flows and parabolic blow-ups.
"""

from .bivector import (
    Basis,
    BivectorCoords,
    DegenerateLineError,
    SpinorPoint,
    Vector4C,
    from_sd_basis,
    pluecker,
    qform_R,
    qform_lambda2g,
    qform_v,
    segre,
    t_minus,
    t_plus,
    to_sd_basis,
)
from .curve import (
    CurveClass,
    CurveCoeffs,
    CurveTag,
    IntersectionCase,
    PencilQuadratic,
    classify,
    curve_coeffs,
    evaluate,
    intersection_case,
    k3_membership,
    normalized_coeffs,
    oracle_check,
    pencil_quadratic,
    projective_distance,
    singular_sample,
)
from .flow import (
    BlowupSequence,
    ConvergenceReport,
    FlowDomainError,
    ModelGeometry,
    blowup_limit_riemann,
    blowup_riemann,
    curve_sequence,
    dyadic_blowup,
    model_geometry,
    riemann_at,
    scale_metric,
    singular_time,
)
from .tensor_core import (
    CurvatureBlocks,
    FramedRiemann,
    SymmetricBilinear4,
    curvature_operator_blocks,
    four_part_decomposition_check,
    kulkarni_nomizu,
    ricci_and_scalar,
    riemann_from_blocks,
    validate_symmetries,
)

__version__ = "0.1.0"

__all__ = [
    "Basis",
    "BivectorCoords",
    "BlowupSequence",
    "ConvergenceReport",
    "CurvatureBlocks",
    "CurveClass",
    "CurveCoeffs",
    "CurveTag",
    "DegenerateLineError",
    "FlowDomainError",
    "FramedRiemann",
    "IntersectionCase",
    "ModelGeometry",
    "PencilQuadratic",
    "SpinorPoint",
    "SymmetricBilinear4",
    "Vector4C",
    "blowup_limit_riemann",
    "blowup_riemann",
    "classify",
    "curvature_operator_blocks",
    "curve_coeffs",
    "curve_sequence",
    "dyadic_blowup",
    "evaluate",
    "four_part_decomposition_check",
    "from_sd_basis",
    "intersection_case",
    "k3_membership",
    "kulkarni_nomizu",
    "model_geometry",
    "normalized_coeffs",
    "oracle_check",
    "pencil_quadratic",
    "pluecker",
    "projective_distance",
    "qform_R",
    "qform_lambda2g",
    "qform_v",
    "ricci_and_scalar",
    "riemann_at",
    "riemann_from_blocks",
    "scale_metric",
    "segre",
    "singular_sample",
    "singular_time",
    "t_minus",
    "t_plus",
    "to_sd_basis",
    "validate_symmetries",
]
