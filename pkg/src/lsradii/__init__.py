"""Lommel/Struve first-kind kernels, their zeros, and the radii of
beta-uniform convexity of order alpha of the six normalized forms."""

from .errors import (BracketFailure, InsufficientZeros, InvalidParameter,
                     LsradiiError, NonConvergence, NotEnoughZeros,
                     NumericalFailure, PreconditionViolation,
                     SingularityReached, ValidationFailure)
from .forms import (CurvatureSeriesData, FormKind, curvature_data,
                    curvature_real, curvature_sum, eval_form, form_weight)
from .kernels import (LommelParam, ProductTruncation, StruveParam, lommel_s,
                      lommel_s_deriv, ml_product, struve_h, struve_h_deriv)
from .radii import (DiskReport, RadiusResult, UniformityParams,
                    classify_domain, conic_contains, conic_margin,
                    convexity_radius, printed_lhs, psi, radius, uc_radius,
                    verify_disk)
from .series import (DEFAULT_CONFIG, Hyp1F2Args, SeriesConfig, gamma_real,
                     hyp1f2, hyp1f2_deriv)
from .tables import (ZERO_TARGETS, bracket_singularity, build_zero_table,
                     kernel_first_zero)
from .zeros import ZeroTable, interlacing_check, lemma1_bound_check, positive_zeros

__version__ = "0.1.0"

__all__ = [
    "BracketFailure", "CurvatureSeriesData", "DEFAULT_CONFIG", "DiskReport",
    "FormKind", "Hyp1F2Args", "InsufficientZeros", "InvalidParameter",
    "LommelParam", "LsradiiError", "NonConvergence", "NotEnoughZeros",
    "NumericalFailure", "PreconditionViolation", "ProductTruncation",
    "RadiusResult", "SeriesConfig", "SingularityReached", "StruveParam",
    "UniformityParams", "ValidationFailure", "ZERO_TARGETS", "ZeroTable",
    "bracket_singularity", "build_zero_table", "classify_domain",
    "conic_contains", "conic_margin", "convexity_radius", "curvature_data",
    "curvature_real", "curvature_sum", "eval_form", "form_weight",
    "gamma_real", "hyp1f2", "hyp1f2_deriv", "interlacing_check",
    "kernel_first_zero", "lemma1_bound_check", "lommel_s", "lommel_s_deriv",
    "ml_product", "positive_zeros", "printed_lhs", "psi", "radius",
    "struve_h", "struve_h_deriv", "uc_radius", "verify_disk",
]
