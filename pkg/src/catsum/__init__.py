"""Sums of Catalan numbers: exact values, rigorous bounds and asymptotic refinements."""

from .bounds import BoundKind, default_precision, eval_bound, log2_estimate
from .exact import catalan, ell, sum_catalan, verify_sum_recurrence
from .interval import Ordering, RealInterval, enclosure_compare
from .report import VerificationReport
from .series import PowerSeries, SeriesExpansion, refined_estimate, solve_expansion
from .verify import delta, find_crossing, verify_thm1, verify_thm2, zeta

__all__ = [
    "BoundKind",
    "Ordering",
    "PowerSeries",
    "RealInterval",
    "SeriesExpansion",
    "VerificationReport",
    "catalan",
    "default_precision",
    "delta",
    "ell",
    "enclosure_compare",
    "eval_bound",
    "find_crossing",
    "log2_estimate",
    "refined_estimate",
    "solve_expansion",
    "sum_catalan",
    "verify_sum_recurrence",
    "verify_thm1",
    "verify_thm2",
    "zeta",
]
