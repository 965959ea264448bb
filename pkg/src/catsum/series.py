"""Asymptotic refinements of ``S_n`` from its three-term recurrence.

The ansatz is ``S_n ~ B(n) * (a_0 + a_1/n + ... + a_p/n^p)`` with ``B`` either
u(n) ("upper") or theta(n) ("lower") and ``a_0 = 1``.  Substituting into

    (n+1) S_n + (1-5n) S_{n-1} - 2(1-2n) S_{n-2} = 0,

dividing by ``B(n)`` and multiplying by ``x = 1/n`` gives a power series in x
whose coefficients must all vanish.  Only the base ratios ``B(n-1)/B(n)``,
``B(n-2)/B(n)`` and the re-expansion of ``1/(n-s)`` in powers of ``1/n`` are
needed, and all of that is exact rational arithmetic.

The leading operator annihilates every monomial, so ``a_r`` is fixed by the
``x^(r+1)`` equation rather than the ``x^r`` one; the ``x^0`` and ``x^1``
equations carry no unknown and must vanish on their own.
"""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import bounds
from .exact import sum_catalan
from .interval import RealInterval

Number = int | Fraction

BASES = ("upper", "lower")


class SeriesError(ArithmeticError):
    """The substituted recurrence is inconsistent or has a singular pivot."""


@dataclass(frozen=True)
class PowerSeries:
    """Truncated power series ``sum coeffs[r] x^r`` for ``r <= order``."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Number], order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("order must be >= 0")
        cs = (cs + [Fraction(0)] * (order + 1))[: order + 1]
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, r: int) -> Fraction:
        return self.coeffs[r] if 0 <= r <= self.order else Fraction(0)

    def truncate(self, order: int) -> PowerSeries:
        return PowerSeries(self.coeffs, order)

    def __add__(self, other: PowerSeries) -> PowerSeries:
        return ps_add(self, other)

    def __mul__(self, other: PowerSeries) -> PowerSeries:
        return ps_mul(self, other)

    def __repr__(self) -> str:
        terms = [f"{c}*x^{r}" for r, c in enumerate(self.coeffs) if c]
        return f"PowerSeries({' + '.join(terms) or '0'}; order={self.order})"


def constant(c: Number, order: int) -> PowerSeries:
    return PowerSeries([c], order)


def monomial(r: int, order: int, c: Number = 1) -> PowerSeries:
    return PowerSeries([0] * r + [c], order)


def ps_add(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    order = max(a.order, b.order)
    return PowerSeries([a[r] + b[r] for r in range(order + 1)], order)


def ps_scale(a: PowerSeries, c: Number) -> PowerSeries:
    c = Fraction(c)
    return PowerSeries([c * x for x in a.coeffs], a.order)


def ps_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Cauchy product truncated at the larger of the two orders."""
    order = max(a.order, b.order)
    out = [Fraction(0)] * (order + 1)
    for i, ai in enumerate(a.coeffs):
        if not ai:
            continue
        for j in range(order + 1 - i):
            out[i + j] += ai * b[j]
    return PowerSeries(out, order)


def ps_binomial(alpha: Number, scale: Number, order: int) -> PowerSeries:
    """Expand ``(1 + scale*x)**alpha`` to ``x**order``."""
    if order < 0:
        raise ValueError("order must be >= 0")
    alpha, scale = Fraction(alpha), Fraction(scale)
    coeffs = [Fraction(1)]
    for r in range(1, order + 1):
        coeffs.append(coeffs[-1] * (alpha - r + 1) / r * scale)
    return PowerSeries(coeffs, order)


def ps_compose_shift(a: PowerSeries, shift: int) -> PowerSeries:
    """Return ``a(x / (1 - shift*x))``, i.e. ``A(1/(n-shift))`` in powers of 1/n."""
    if shift not in (1, 2):
        raise ValueError(f"shift must be 1 or 2, got {shift}")
    order = a.order
    g = PowerSeries([0] + [shift ** (r - 1) for r in range(1, order + 1)], order)
    out = constant(0, order)
    power = constant(1, order)
    for r in range(order + 1):
        if a[r]:
            out = out + ps_scale(power, a[r])
        power = power * g
    return out


def _base_ratios(base: str, order: int) -> tuple[PowerSeries, PowerSeries]:
    """``B(n-1)/B(n)`` and ``B(n-2)/B(n)`` as series in x = 1/n."""
    if base == "upper":
        # u(n) ~ 4^n n^(-3/2)
        r1 = ps_scale(ps_binomial(Fraction(-3, 2), -1, order), Fraction(1, 4))
        r2 = ps_scale(ps_binomial(Fraction(-3, 2), -2, order), Fraction(1, 16))
    elif base == "lower":
        # theta(n) ~ 4^n (n+1)^(-1) n^(-1/2)
        one_plus_x = PowerSeries([1, 1], order)
        r1 = ps_scale(one_plus_x * ps_binomial(Fraction(-1, 2), -1, order), Fraction(1, 4))
        r2 = ps_scale(
            one_plus_x * ps_binomial(-1, -1, order) * ps_binomial(Fraction(-1, 2), -2, order),
            Fraction(1, 16),
        )
    else:
        raise ValueError(f"base must be one of {BASES}, got {base!r}")
    return r1, r2


def recurrence_operator(base: str, order: int) -> list[PowerSeries]:
    """Residual contribution ``L_r`` of each ansatz monomial ``x^r``, r <= order.

    The residual of ``sum a_r x^r`` is ``sum a_r L_r``.
    """
    r1, r2 = _base_ratios(base, order)
    c0 = PowerSeries([1, 1], order)  # (n+1) x
    c1 = PowerSeries([-5, 1], order) * r1  # (1-5n) x
    c2 = PowerSeries([4, -2], order) * r2  # -2(1-2n) x
    ops = []
    for r in range(order + 1):
        m = monomial(r, order)
        ops.append(c0 * m + c1 * ps_compose_shift(m, 1) + c2 * ps_compose_shift(m, 2))
    return ops


@dataclass(frozen=True)
class SeriesExpansion:
    base: str
    order: int
    coeffs: tuple[Fraction, ...]

    def literal_powers(self) -> list[float | None]:
        """Map ``a_r`` to ``c_r`` with ``c_r**r == a_r`` (real root; None if none).

        ``c_0`` is taken as 1.
        """
        out: list[float | None] = [1.0]
        for r, a in enumerate(self.coeffs[1:], start=1):
            if a < 0 and r % 2 == 0:
                out.append(None)
            else:
                out.append(math.copysign(abs(float(a)) ** (1 / r), float(a)))
        return out


def solve_expansion(base: str, p: int) -> SeriesExpansion:
    """Solve for ``a_0 = 1, a_1, ..., a_p`` order by order."""
    if p < 0:
        raise ValueError("p must be >= 0")
    order = p + 1
    ops = recurrence_operator(base, order)
    for r, op in enumerate(ops):
        if op[r] != 0:
            raise SeriesError(f"x^{r} term of L_{r} is {op[r]}, expected 0")
    coeffs = [Fraction(1)]
    if ops[0][0] != 0:
        raise SeriesError(f"x^0 residual is {ops[0][0]}, expected 0")
    if ops[0][1] != 0:
        raise SeriesError(f"x^1 residual is {ops[0][1]}, expected 0")
    for r in range(1, p + 1):
        m = r + 1
        pivot = ops[r][m]
        if pivot == 0:
            raise SeriesError(f"degenerate equation at x^{m} for a_{r}")
        rhs = sum(coeffs[s] * ops[s][m] for s in range(r))
        coeffs.append(-rhs / pivot)
    return SeriesExpansion(base, p, tuple(coeffs))


def residual(base: str, coeffs: Sequence[Number], order: int) -> PowerSeries:
    """Residual series of the recurrence for a given coefficient list."""
    ops = recurrence_operator(base, order)
    out = constant(0, order)
    for a, op in zip(coeffs, ops):
        out = out + ps_scale(op, a)
    return out


_BASE_KIND = {"upper": bounds.BoundKind.UPPER_U, "lower": bounds.BoundKind.LOWER_THETA}


def refined_estimate(
    base: str, p: int, n: int, precision_bits: int | None = None
) -> RealInterval:
    """Enclosure of ``B(n) * sum_{r<=p} a_r n^-r``."""
    exp = solve_expansion(base, p)
    poly = sum(a / Fraction(n) ** r for r, a in enumerate(exp.coeffs))
    b = bounds.eval_bound(_BASE_KIND[base], n, precision_bits)
    return b * poly


@dataclass(frozen=True)
class DecayReport:
    base: str
    p: int
    points: tuple[tuple[int, float], ...]  # (n, relative error)
    slope: float


def relative_error(base: str, p: int, n: int, precision_bits: int | None = None) -> RealInterval:
    s = sum_catalan(n)
    est = refined_estimate(base, p, n, precision_bits)
    err = (est - s) / s
    if err.lo < 0 < err.hi:
        raise ArithmeticError(f"sign of the error at n={n} is undecided")
    return err if err.lo > 0 else -err


def error_decay_check(base: str, p: int, n_list: Sequence[int]) -> DecayReport:
    """Relative error per n and the least-squares slope of log(err) vs log(n)."""
    if list(n_list) != sorted(n_list) or any(n < 8 for n in n_list):
        raise ValueError("n_list must be ascending with every n >= 8")
    points = tuple((n, float(relative_error(base, p, n).mid)) for n in n_list)
    if len(points) < 2:
        raise ValueError("need at least two points for a slope")
    xs = [math.log(n) for n, _ in points]
    ys = [math.log(e) for _, e in points]
    slope = statistics.linear_regression(xs, ys).slope
    return DecayReport(base, p, points, slope)
