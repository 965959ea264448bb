from fractions import Fraction

import gmpy2
import pytest
from hypothesis import given, strategies as st

from catsum.interval import Ordering, RealInterval, enclosure_compare


def iv(lo, hi, prec=64):
    return RealInterval(gmpy2.mpfr(lo, prec), gmpy2.mpfr(hi, prec), prec)


@pytest.mark.parametrize(
    "a, b, expected",
    [
        ((1, 2), (3, 4), Ordering.LESS),
        ((3, 4), (1, 2), Ordering.GREATER),
        ((1, 3), (2, 4), Ordering.UNDECIDED),
        ((1, 2), (2, 3), Ordering.UNDECIDED),
    ],
)
def test_enclosure_compare(a, b, expected):
    assert enclosure_compare(iv(*a), iv(*b)) is expected


def test_rejects_inverted_or_infinite():
    with pytest.raises(ValueError):
        iv(2, 1)
    with pytest.raises(ValueError):
        RealInterval(gmpy2.mpfr(0), gmpy2.mpfr("inf"), 64)


def test_exact_rational_is_outward():
    x = RealInterval.exact(Fraction(1, 3), 64)
    assert x.lo < gmpy2.mpq(1, 3) < x.hi
    assert RealInterval.exact(12345, 64).width == 0


def test_pi_enclosure():
    p = RealInterval.pi(200)
    assert p.lo < p.hi
    assert p.contains(gmpy2.mpq(314159265358979323846264338327950288419716939937510, 10**50)) is False
    assert float(p.mid) == pytest.approx(3.141592653589793)


def test_division_by_interval_containing_zero():
    with pytest.raises(ZeroDivisionError):
        iv(1, 2) / iv(-1, 1)


fractions = st.fractions(min_value=-1000, max_value=1000, max_denominator=10**6)


@given(fractions, fractions)
def test_arithmetic_encloses_exact_result(a, b):
    x, y = RealInterval.exact(a, 64), RealInterval.exact(b, 64)
    assert (x + y).contains(a + b)
    assert (x - y).contains(a - b)
    assert (x * y).contains(a * b)
    if b != 0:
        assert (x / y).contains(a / b)


@given(st.fractions(min_value=0, max_value=10**6, max_denominator=1000))
def test_sqrt_encloses(a):
    r = RealInterval.exact(a, 80).sqrt()
    assert gmpy2.mpq(r.lo) ** 2 <= gmpy2.mpq(a) <= gmpy2.mpq(r.hi) ** 2


def test_negation_keeps_precision():
    x = RealInterval.exact(Fraction(1, 3), 256)
    y = 1 - x
    assert y.contains(Fraction(2, 3))
    assert (-x).width == x.width
    assert (-(-x)) == x
