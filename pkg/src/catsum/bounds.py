"""Closed-form estimators of ``S_n`` and ``C_k`` as rigorous enclosures.

``S_n`` estimators (argument n):

* ``UPPER_U``      u(n) = 4^(n+1) / (3 sqrt(pi n^3))
* ``LOWER_THETA``  theta(n) = 4^(n+1) / (3 (n+1) sqrt(pi n))
* ``MEAN_MU``      mu(n) = (u(n) + theta(n)) / 2

``C_k`` estimators (argument k):

* ``NU_UPPER``     nu(k) = 2^(2k+1) / ((k+1) sqrt(pi (4k+1)))
* ``DUTTON_LOWER`` 2^(2k-1) / (k (k+1) sqrt(pi / (4k-1)))
* ``UPSILON``      upsilon(k) = 4^k / ((k+1) sqrt(pi k))
"""

from __future__ import annotations

import enum
import math

from .interval import RealInterval

MIN_PRECISION = 64
# extra working bits so the final outward rounding dominates the width
GUARD_BITS = 32


class BoundKind(enum.Enum):
    UPPER_U = "upper_u"
    LOWER_THETA = "lower_theta"
    MEAN_MU = "mean_mu"
    NU_UPPER = "nu_upper"
    DUTTON_LOWER = "dutton_lower"
    UPSILON = "upsilon"


def default_precision(n: int) -> int:
    """Working precision for index n: ``max(128, 2n + 64)`` bits."""
    return max(128, 2 * n + 64)


def _check(n: int, precision_bits: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"n must be an int, got {type(n).__name__}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if precision_bits < MIN_PRECISION:
        raise ValueError(f"precision_bits must be >= {MIN_PRECISION}, got {precision_bits}")


def _u(n: int, prec: int) -> RealInterval:
    pi = RealInterval.pi(prec)
    return (1 / (3 * (pi * n**3).sqrt())).scale_2exp(2 * n + 2)


def _theta(n: int, prec: int) -> RealInterval:
    pi = RealInterval.pi(prec)
    return (1 / (3 * (n + 1) * (pi * n).sqrt())).scale_2exp(2 * n + 2)


def _mu(n: int, prec: int) -> RealInterval:
    return (_u(n, prec) + _theta(n, prec)).scale_2exp(-1)


def _nu(k: int, prec: int) -> RealInterval:
    pi = RealInterval.pi(prec)
    return (1 / ((k + 1) * (pi * (4 * k + 1)).sqrt())).scale_2exp(2 * k + 1)


def _dutton(k: int, prec: int) -> RealInterval:
    pi = RealInterval.pi(prec)
    return (1 / (k * (k + 1) * (pi / (4 * k - 1)).sqrt())).scale_2exp(2 * k - 1)


def _upsilon(k: int, prec: int) -> RealInterval:
    pi = RealInterval.pi(prec)
    return (1 / ((k + 1) * (pi * k).sqrt())).scale_2exp(2 * k)


_FORMULAS = {
    BoundKind.UPPER_U: _u,
    BoundKind.LOWER_THETA: _theta,
    BoundKind.MEAN_MU: _mu,
    BoundKind.NU_UPPER: _nu,
    BoundKind.DUTTON_LOWER: _dutton,
    BoundKind.UPSILON: _upsilon,
}


def eval_bound(kind: BoundKind | str, n: int, precision_bits: int | None = None) -> RealInterval:
    """Enclose the selected estimator at n.

    The formula is evaluated with ``GUARD_BITS`` extra bits and the result
    rounded outward to ``precision_bits``, which keeps the width within a
    couple of ulps at the requested precision.
    """
    kind = BoundKind(kind)
    if precision_bits is None:
        precision_bits = default_precision(n)
    _check(n, precision_bits)
    raw = _FORMULAS[kind](n, precision_bits + GUARD_BITS)
    return raw.at_precision(precision_bits)


_LOG2_3 = math.log2(3)
_LOG2_PI = math.log2(math.pi)


def log2_estimate(kind: BoundKind | str, n: int) -> float:
    """``log2`` of the selected estimator in double precision.

    Usable far beyond the range where the value itself fits in a float; the
    relative error of the returned logarithm stays below 1e-12 for n up to
    1e9.  Not rigorous.
    """
    kind = BoundKind(kind)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    lg = math.log2
    if kind is BoundKind.UPPER_U:
        return 2 * (n + 1) - _LOG2_3 - 0.5 * (_LOG2_PI + 3 * lg(n))
    if kind is BoundKind.LOWER_THETA:
        return 2 * (n + 1) - _LOG2_3 - lg(n + 1) - 0.5 * (_LOG2_PI + lg(n))
    if kind is BoundKind.MEAN_MU:
        # mu/u = (2n+1)/(2n+2) = 1 - 1/(2n+2)
        return log2_estimate(BoundKind.UPPER_U, n) + math.log1p(-1 / (2 * n + 2)) / math.log(2)
    if kind is BoundKind.NU_UPPER:
        return 2 * n + 1 - lg(n + 1) - 0.5 * (_LOG2_PI + lg(4 * n + 1))
    if kind is BoundKind.DUTTON_LOWER:
        return 2 * n - 1 - lg(n) - lg(n + 1) + 0.5 * (lg(4 * n - 1) - _LOG2_PI)
    return 2 * n - lg(n + 1) - 0.5 * (_LOG2_PI + lg(n))
