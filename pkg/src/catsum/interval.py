"""Outward-rounded real intervals on top of MPFR.

Every endpoint is produced by an MPFR operation in an explicit rounding
context, lower endpoints rounded toward -inf and upper ones toward +inf, so
an interval built from exact inputs always contains the exact result.  No
global gmpy2 context is touched.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import gmpy2
from gmpy2 import mpfr


class Ordering(enum.Enum):
    LESS = "LESS"
    GREATER = "GREATER"
    UNDECIDED = "UNDECIDED"


@lru_cache(maxsize=256)
def _contexts(prec: int) -> tuple[gmpy2.context, gmpy2.context]:
    kw = dict(
        precision=prec,
        emin=gmpy2.get_emin_min(),
        emax=gmpy2.get_emax_max(),
        trap_overflow=True,
        trap_underflow=True,
        trap_invalid=True,
        trap_divzero=True,
    )
    return (
        gmpy2.context(round=gmpy2.RoundDown, **kw),
        gmpy2.context(round=gmpy2.RoundUp, **kw),
    )


def _to_mpfr(x, prec: int, down: bool) -> mpfr:
    ctx = _contexts(prec)[0 if down else 1]
    if isinstance(x, Fraction):
        x = gmpy2.mpq(x.numerator, x.denominator)
    return mpfr(x, 0, ctx)


@dataclass(frozen=True)
class RealInterval:
    """Closed interval ``[lo, hi]`` of MPFR numbers at ``precision_bits``."""

    lo: mpfr
    hi: mpfr
    precision_bits: int

    def __post_init__(self) -> None:
        if not (gmpy2.is_finite(self.lo) and gmpy2.is_finite(self.hi)):
            raise ValueError("interval endpoints must be finite")
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    # -- construction ---------------------------------------------------

    @classmethod
    def exact(cls, value: int | Fraction, prec: int) -> RealInterval:
        """Tightest enclosure of an integer or rational at ``prec`` bits."""
        return cls(_to_mpfr(value, prec, True), _to_mpfr(value, prec, False), prec)

    @classmethod
    def pi(cls, prec: int) -> RealInterval:
        down, up = _contexts(prec)
        return cls(down.const_pi(), up.const_pi(), prec)

    def at_precision(self, prec: int) -> RealInterval:
        """Round the endpoints outward to ``prec`` bits."""
        down, up = _contexts(prec)
        return RealInterval(down.plus(self.lo), up.plus(self.hi), prec)

    # -- queries --------------------------------------------------------

    @property
    def width(self) -> mpfr:
        return _contexts(self.precision_bits)[1].sub(self.hi, self.lo)

    @property
    def mid(self) -> mpfr:
        ctx = _contexts(self.precision_bits + 1)[0]
        return ctx.div_2exp(ctx.add(self.lo, self.hi), 1)

    def ulp(self) -> mpfr:
        """Unit in the last place of the larger-magnitude endpoint."""
        down = _contexts(self.precision_bits)[0]
        big = max(down.abs(self.lo), down.abs(self.hi))
        if big == 0:
            return mpfr(0)
        # big = m * 2**exp with 1/2 <= m < 1
        exp = gmpy2.frexp(big)[0]
        return gmpy2.mul_2exp(mpfr(1), exp - self.precision_bits)

    def contains(self, x: int | Fraction | mpfr) -> bool:
        if isinstance(x, (int, Fraction)):
            return self.lo <= gmpy2.mpq(x) <= self.hi
        return self.lo <= x <= self.hi

    def overlaps(self, other: RealInterval) -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def __float__(self) -> float:
        return float(self.mid)

    # -- arithmetic -----------------------------------------------------

    def _prec(self, other: RealInterval) -> int:
        return max(self.precision_bits, other.precision_bits)

    def _coerce(self, other) -> RealInterval:
        if isinstance(other, RealInterval):
            return other
        if isinstance(other, (int, Fraction)):
            return RealInterval.exact(other, self.precision_bits)
        return NotImplemented

    def __neg__(self) -> RealInterval:
        # exact at the endpoints' own precision; bare ``-x`` would round to 53 bits
        down = _contexts(self.precision_bits)[0]
        return RealInterval(down.minus(self.hi), down.minus(self.lo), self.precision_bits)

    def __add__(self, other) -> RealInterval:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        down, up = _contexts(self._prec(other))
        return RealInterval(down.add(self.lo, other.lo), up.add(self.hi, other.hi), self._prec(other))

    __radd__ = __add__

    def __sub__(self, other) -> RealInterval:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        down, up = _contexts(self._prec(other))
        return RealInterval(down.sub(self.lo, other.hi), up.sub(self.hi, other.lo), self._prec(other))

    def __rsub__(self, other) -> RealInterval:
        return -self + other

    def __mul__(self, other) -> RealInterval:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        prec = self._prec(other)
        down, up = _contexts(prec)
        pairs = [(a, b) for a in (self.lo, self.hi) for b in (other.lo, other.hi)]
        lo = min(down.mul(a, b) for a, b in pairs)
        hi = max(up.mul(a, b) for a, b in pairs)
        return RealInterval(lo, hi, prec)

    __rmul__ = __mul__

    def __truediv__(self, other) -> RealInterval:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.lo <= 0 <= other.hi:
            raise ZeroDivisionError("divisor interval contains zero")
        prec = self._prec(other)
        down, up = _contexts(prec)
        pairs = [(a, b) for a in (self.lo, self.hi) for b in (other.lo, other.hi)]
        lo = min(down.div(a, b) for a, b in pairs)
        hi = max(up.div(a, b) for a, b in pairs)
        return RealInterval(lo, hi, prec)

    def __rtruediv__(self, other) -> RealInterval:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def sqrt(self) -> RealInterval:
        if self.lo < 0:
            raise ValueError("square root of an interval reaching below zero")
        down, up = _contexts(self.precision_bits)
        return RealInterval(down.sqrt(self.lo), up.sqrt(self.hi), self.precision_bits)

    def scale_2exp(self, e: int) -> RealInterval:
        """Multiply by ``2**e``; exact unless the exponent range is exceeded."""
        down, up = _contexts(self.precision_bits)
        return RealInterval(down.mul_2exp(self.lo, e), up.mul_2exp(self.hi, e), self.precision_bits)

    def log2(self) -> RealInterval:
        if self.lo <= 0:
            raise ValueError("log2 of an interval reaching zero or below")
        down, up = _contexts(self.precision_bits)
        return RealInterval(down.log2(self.lo), up.log2(self.hi), self.precision_bits)


def enclosure_compare(a: RealInterval, b: RealInterval) -> Ordering:
    """Decide ``a < b`` or ``a > b`` rigorously, or report UNDECIDED."""
    if a.hi < b.lo:
        return Ordering.LESS
    if a.lo > b.hi:
        return Ordering.GREATER
    return Ordering.UNDECIDED
