"""Exact and high-precision computation of sinc-product integrals,
their integer-sample sum counterparts, breaking points, and deficits."""

from .borwein_engine import (
    CosineWeightSpec,
    EvalReport,
    ExactPathUnavailableError,
    NodeBudgetError,
    SincProductSpec,
    deficit_report,
    edge_polynomial,
    fourier_spline,
    integral_exact,
    point_eval_pruned,
    sinc_power_breaking,
    theorem1_support_check,
    weighted_integral_exact,
)
from .exact_core import (
    BreakingPointResult,
    HarmonicFamily,
    Interval,
    NonTerminatingSearchError,
    breaking_point,
    breaking_point_report,
    interval_odd_harmonic_sum,
    odd_harmonic_sum,
)
from .numeric_oracle import (
    RealScales,
    SumResult,
    ToleranceUnreachableError,
    bandlimited_kernel,
    example5_integral,
    lower_bound_check,
    numeric_integral,
    numeric_sum,
    verify_ft_example5,
    verify_theorem1,
)
from .rational import Rat, rat, rat_str, to_decimal
from .spline_engine import JumpConvention, PiecewisePolynomial, SplineSizeError, box

__version__ = "0.1.0"

__all__ = [
    "BreakingPointResult",
    "CosineWeightSpec",
    "EvalReport",
    "ExactPathUnavailableError",
    "HarmonicFamily",
    "Interval",
    "JumpConvention",
    "NodeBudgetError",
    "NonTerminatingSearchError",
    "PiecewisePolynomial",
    "Rat",
    "RealScales",
    "SincProductSpec",
    "SplineSizeError",
    "SumResult",
    "ToleranceUnreachableError",
    "bandlimited_kernel",
    "box",
    "breaking_point",
    "breaking_point_report",
    "deficit_report",
    "edge_polynomial",
    "example5_integral",
    "fourier_spline",
    "integral_exact",
    "interval_odd_harmonic_sum",
    "lower_bound_check",
    "numeric_integral",
    "numeric_sum",
    "odd_harmonic_sum",
    "point_eval_pruned",
    "rat",
    "rat_str",
    "sinc_power_breaking",
    "theorem1_support_check",
    "to_decimal",
    "verify_ft_example5",
    "verify_theorem1",
    "weighted_integral_exact",
]
