import math

import gmpy2
import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from catsum.bounds import BoundKind, default_precision, eval_bound, log2_estimate
from catsum.exact import catalan
from catsum.interval import Ordering, RealInterval, enclosure_compare


def reference(kind, n, dps=200):
    """Independent evaluation of each formula with mpmath at high precision."""
    with mpmath.workdps(dps):
        pi, sqrt, four = mpmath.pi, mpmath.sqrt, mpmath.mpf(4)
        if kind is BoundKind.UPPER_U:
            return four ** (n + 1) / (3 * sqrt(pi * n**3))
        if kind is BoundKind.LOWER_THETA:
            return four ** (n + 1) / (3 * (n + 1) * sqrt(pi * n))
        if kind is BoundKind.MEAN_MU:
            return (reference(BoundKind.UPPER_U, n, dps) + reference(BoundKind.LOWER_THETA, n, dps)) / 2
        if kind is BoundKind.NU_UPPER:
            return mpmath.mpf(2) ** (2 * n + 1) / ((n + 1) * sqrt(pi * (4 * n + 1)))
        if kind is BoundKind.DUTTON_LOWER:
            return mpmath.mpf(2) ** (2 * n - 1) / (n * (n + 1) * sqrt(pi / (4 * n - 1)))
        return four**n / ((n + 1) * sqrt(pi * n))


def as_rational(x):
    man, exp = x.man_exp
    return gmpy2.mpq(man) * gmpy2.mpq(2) ** exp


def contains(iv, value):
    q = as_rational(value)
    return gmpy2.mpq(iv.lo) <= q <= gmpy2.mpq(iv.hi)


@pytest.mark.parametrize("kind", list(BoundKind))
@pytest.mark.parametrize("n", [1, 2, 8, 50, 333])
def test_enclosure_contains_reference(kind, n):
    prec = default_precision(n)
    iv = eval_bound(kind, n, prec)
    # reference carries ~3.3x more bits than the interval
    assert contains(iv, reference(kind, n, dps=prec))
    # width within 4 ulps at the requested precision
    assert iv.width <= 4 * iv.ulp()


def test_examples():
    u1 = eval_bound(BoundKind.UPPER_U, 1, 128)
    with mpmath.workdps(100):
        assert contains(u1, 16 / (3 * mpmath.sqrt(mpmath.pi)))
    assert abs(float(u1.mid) - 3.009011) < 1e-6
    t1 = eval_bound(BoundKind.LOWER_THETA, 1, 128)
    assert abs(float(t1.mid) - 1.504506) < 1e-6
    assert (2 * t1).overlaps(u1)
    u8 = eval_bound(BoundKind.UPPER_U, 8, 192)
    assert abs(float(u8.mid) - 2178.76) < 0.01
    with mpmath.workdps(100):
        assert contains(u8, mpmath.mpf(4) ** 9 / (3 * mpmath.sqrt(512 * mpmath.pi)))


def test_rejects_bad_arguments():
    with pytest.raises(ValueError):
        eval_bound(BoundKind.UPPER_U, 0, 128)
    with pytest.raises(ValueError):
        eval_bound(BoundKind.UPPER_U, 5, 63)
    with pytest.raises(ValueError):
        eval_bound("not_a_kind", 5, 128)


def test_default_precision_policy():
    assert default_precision(1) == 128
    assert default_precision(32) == 128
    assert default_precision(100) == 264


@pytest.mark.parametrize("kind", [BoundKind.UPPER_U, BoundKind.LOWER_THETA, BoundKind.NU_UPPER])
def test_doubling_precision_never_widens(kind):
    for n in (3, 40, 700):
        prec = default_precision(n)
        a = eval_bound(kind, n, prec)
        b = eval_bound(kind, n, 2 * prec)
        assert b.width <= a.width
        assert b.overlaps(a)


@given(st.integers(min_value=1, max_value=3000), st.sampled_from([64, 128, 512]))
@settings(max_examples=60, deadline=None)
def test_theta_u_identity(n, prec):
    u = eval_bound(BoundKind.UPPER_U, n, prec)
    t = eval_bound(BoundKind.LOWER_THETA, n, prec)
    assert ((n + 1) * t).overlaps(n * u)


@given(st.integers(min_value=1, max_value=3000))
@settings(max_examples=60, deadline=None)
def test_mu_is_halved_sum_and_between(n):
    prec = default_precision(n)
    u = eval_bound(BoundKind.UPPER_U, n, prec)
    t = eval_bound(BoundKind.LOWER_THETA, n, prec)
    mu = eval_bound(BoundKind.MEAN_MU, n, prec)
    assert mu.overlaps((u + t).scale_2exp(-1))
    assert enclosure_compare(t, mu) is Ordering.LESS
    assert enclosure_compare(mu, u) is Ordering.LESS


def test_quotient_tends_to_one():
    n = 10**6
    prec = 256
    q = eval_bound(BoundKind.UPPER_U, n, prec) / eval_bound(BoundKind.LOWER_THETA, n, prec)
    assert abs(float(q.mid) - 1) < 1e-5
    assert q.contains(gmpy2.mpq(n + 1, n)) or abs(float(q.mid) - (n + 1) / n) < 1e-15


def test_catalan_sandwich_small_k():
    for k in range(1, 200):
        prec = default_precision(k)
        c = RealInterval.exact(catalan(k), prec)
        assert enclosure_compare(eval_bound(BoundKind.NU_UPPER, k, prec), c) is Ordering.GREATER
        assert enclosure_compare(c, eval_bound(BoundKind.DUTTON_LOWER, k, prec)) is Ordering.GREATER
    assert abs(float(eval_bound(BoundKind.NU_UPPER, 1).mid) - 1.009) < 1e-3
    assert abs(float(eval_bound(BoundKind.DUTTON_LOWER, 1).mid) - 0.977) < 1e-3


@pytest.mark.parametrize("kind", list(BoundKind))
@pytest.mark.parametrize("n", [1, 2, 8, 100, 1000])
def test_log2_estimate_matches_enclosure(kind, n):
    iv = eval_bound(kind, n)
    exact_log = float(iv.log2().mid)
    assert log2_estimate(kind, n) == pytest.approx(exact_log, rel=1e-12, abs=1e-12)


def test_log2_examples():
    assert log2_estimate(BoundKind.UPPER_U, 1) == pytest.approx(1.58928, abs=1e-5)
    assert log2_estimate(BoundKind.UPPER_U, 8) == pytest.approx(11.0893, abs=1e-4)


@given(st.integers(min_value=1, max_value=10**9))
def test_log2_theta_u_identity(n):
    diff = log2_estimate(BoundKind.LOWER_THETA, n) - log2_estimate(BoundKind.UPPER_U, n)
    expected = math.log2(n / (n + 1))
    # cancellation against the 2(n+1) term costs about log2(n) bits
    assert diff == pytest.approx(expected, abs=1e-15 * max(2 * n, 1e3))


def test_log2_large_n_against_mpmath():
    for n in (10**5, 10**7, 10**9):
        with mpmath.workdps(50):
            ref = (2 * (n + 1) - mpmath.log(3, 2) - mpmath.log(mpmath.pi * mpmath.mpf(n) ** 3, 2) / 2)
        assert abs(log2_estimate(BoundKind.UPPER_U, n) - float(ref)) / float(ref) < 1e-12
