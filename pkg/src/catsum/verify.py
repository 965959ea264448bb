"""Rigorous sweeps over the inequalities and identities for ``S_n``.

Interval checks start at :func:`bounds.default_precision` and double the
precision whenever a comparison is undecided, up to ``PRECISION_CAP_FACTOR``
times the starting precision.  Hitting the cap yields an ``inconclusive``
verdict, never a silent pass or fail.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .bounds import BoundKind, default_precision, eval_bound
from .exact import catalan, sum_catalan
from .interval import Ordering, RealInterval, enclosure_compare
from .report import INCONCLUSIVE, VIOLATED, VerificationReport

PRECISION_CAP_FACTOR = 16
RATIO_WIDTH = Fraction(1, 10**6)


class InconclusiveError(ArithmeticError):
    """A comparison stayed undecided at the precision cap."""

    def __init__(self, n: int, what: str):
        super().__init__(f"n={n}: {what} undecided at the precision cap")
        self.n = n


def _precisions(start: int) -> Iterable[int]:
    prec = start
    while prec <= PRECISION_CAP_FACTOR * start:
        yield prec
        prec *= 2


def decide(check: Callable[[int], Ordering], start: int) -> tuple[Ordering, int]:
    """Run ``check(prec)`` at growing precision until it is decided."""
    for prec in _precisions(start):
        verdict = check(prec)
        if verdict is not Ordering.UNDECIDED:
            return verdict, prec
    return Ordering.UNDECIDED, prec


@dataclass(frozen=True)
class _Values:
    s: RealInterval
    u: RealInterval
    theta: RealInterval
    mu: RealInterval


def _values(n: int, prec: int) -> _Values:
    return _Values(
        RealInterval.exact(sum_catalan(n), prec),
        eval_bound(BoundKind.UPPER_U, n, prec),
        eval_bound(BoundKind.LOWER_THETA, n, prec),
        eval_bound(BoundKind.MEAN_MU, n, prec),
    )


def _check_range(n_lo: int, n_hi: int) -> None:
    if n_lo < 1:
        raise ValueError(f"range must start at 1 or above, got {n_lo}")
    if n_hi < n_lo:
        raise ValueError(f"empty range [{n_lo}, {n_hi}]")


# -- error ratios -----------------------------------------------------------


def _delta_at(n: int, prec: int) -> RealInterval:
    v = _values(n, prec)
    return (v.s - v.theta) / (v.u - v.s)


def _zeta_at(n: int, prec: int) -> RealInterval:
    v = _values(n, prec)
    return (v.mu - v.s) / (v.u - v.s)


def _refine(at: Callable[[int, int], RealInterval], n: int, precision_bits: int | None) -> RealInterval:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    start = precision_bits or default_precision(n)
    result = None
    for prec in _precisions(start):
        try:
            result = at(n, prec)
        except ZeroDivisionError:
            continue
        if result.width < RATIO_WIDTH:
            return result
    if result is None:
        raise InconclusiveError(n, "sign of u(n) - S_n")
    return result


def delta(n: int, precision_bits: int | None = None) -> RealInterval:
    """Enclosure of ``(S_n - theta(n)) / (u(n) - S_n)`` of width below 1e-6."""
    return _refine(_delta_at, n, precision_bits)


def zeta(n: int, precision_bits: int | None = None) -> RealInterval:
    """Enclosure of ``(mu(n) - S_n) / (u(n) - S_n)`` of width below 1e-6."""
    return _refine(_zeta_at, n, precision_bits)


def compare_to(x: Callable[[int, int], RealInterval], n: int, threshold: Fraction) -> Ordering:
    def check(prec: int) -> Ordering:
        return enclosure_compare(x(n, prec), RealInterval.exact(threshold, prec))

    return decide(check, default_precision(n))[0]


def find_crossing(threshold: Fraction | int, n_lo: int, n_hi: int) -> int | None:
    """Smallest n in range where delta drops below ``threshold``.

    That is, ``delta(n) < threshold`` while ``delta(n-1)`` is not (n-1 may lie
    left of the range).  Returns None when no such n exists; raises
    :class:`InconclusiveError` if an undecidable comparison blocks the answer.
    """
    _check_range(n_lo, n_hi)
    threshold = Fraction(threshold)

    def below(n: int) -> bool:
        verdict = compare_to(_delta_at, n, threshold)
        if verdict is Ordering.UNDECIDED:
            raise InconclusiveError(n, f"delta(n) vs {threshold}")
        return verdict is Ordering.LESS

    prev = below(n_lo - 1) if n_lo > 1 else False
    for n in range(n_lo, n_hi + 1):
        cur = below(n)
        if cur and not prev:
            return n
        prev = cur
    return None


# -- theorem sweeps ---------------------------------------------------------


def _holds_from(ok: Sequence[bool], n_lo: int) -> int | None:
    """First n such that the check passes on every n from there to the end."""
    first = None
    for i in range(len(ok) - 1, -1, -1):
        if not ok[i]:
            break
        first = n_lo + i
    return first


def _verdict(name: str, ordering: Ordering, want: Ordering) -> str | None:
    if ordering is want:
        return None
    if ordering is Ordering.UNDECIDED:
        return f"{INCONCLUSIVE}: {name}"
    return f"{VIOLATED}: {name}"


def verify_thm1(n_max: int, n_lo: int = 1) -> VerificationReport:
    """Check ``u(n) > S_n > theta(n)`` for every n in ``[n_lo, n_max]``.

    Each side is recorded separately; ``details["thresholds"]`` holds the
    smallest n from which that side holds through ``n_max`` (None if it fails
    at ``n_max``).
    """
    _check_range(n_lo, n_max)
    failures = []
    upper_ok, lower_ok = [], []
    max_prec = 0
    for n in range(n_lo, n_max + 1):
        s = sum_catalan(n)
        start = default_precision(n)
        up, p1 = decide(
            lambda prec: enclosure_compare(
                eval_bound(BoundKind.UPPER_U, n, prec), RealInterval.exact(s, prec)
            ),
            start,
        )
        lo, p2 = decide(
            lambda prec: enclosure_compare(
                RealInterval.exact(s, prec), eval_bound(BoundKind.LOWER_THETA, n, prec)
            ),
            start,
        )
        max_prec = max(max_prec, p1, p2)
        upper_ok.append(up is Ordering.GREATER)
        lower_ok.append(lo is Ordering.GREATER)
        for msg in (
            _verdict("u(n) > S_n", up, Ordering.GREATER),
            _verdict("S_n > theta(n)", lo, Ordering.GREATER),
        ):
            if msg:
                failures.append((n, msg))
    details = {
        "thresholds": {
            "upper": _holds_from(upper_ok, n_lo),
            "lower": _holds_from(lower_ok, n_lo),
        }
    }
    return VerificationReport("thm1", (n_lo, n_max), n_max - n_lo + 1, failures, max_prec, details)


def verify_thm2(n_lo: int, n_hi: int) -> VerificationReport:
    """Check ``u(n) + theta(n) > 2 S_n`` for every n in range."""
    _check_range(n_lo, n_hi)
    failures = []
    ok = []
    max_prec = 0
    for n in range(n_lo, n_hi + 1):
        two_s = 2 * sum_catalan(n)
        verdict, prec = decide(
            lambda prec: enclosure_compare(
                eval_bound(BoundKind.UPPER_U, n, prec) + eval_bound(BoundKind.LOWER_THETA, n, prec),
                RealInterval.exact(two_s, prec),
            ),
            default_precision(n),
        )
        max_prec = max(max_prec, prec)
        ok.append(verdict is Ordering.GREATER)
        msg = _verdict("u(n) + theta(n) > 2 S_n", verdict, Ordering.GREATER)
        if msg:
            failures.append((n, msg))
    details = {"threshold": _holds_from(ok, n_lo)}
    return VerificationReport("thm2", (n_lo, n_hi), n_hi - n_lo + 1, failures, max_prec, details)


def verify_catalan_bounds(k_max: int, k_lo: int = 1) -> VerificationReport:
    """Check ``nu(k) > C_k > dutton(k)`` and ``nu(k) - C_k <= (upsilon(k) - C_k) / 3``."""
    _check_range(k_lo, k_max)
    failures = []
    max_prec = 0

    for k in range(k_lo, k_max + 1):
        c = catalan(k)

        def upper(prec):
            return enclosure_compare(eval_bound(BoundKind.NU_UPPER, k, prec), RealInterval.exact(c, prec))

        def lower(prec):
            return enclosure_compare(RealInterval.exact(c, prec), eval_bound(BoundKind.DUTTON_LOWER, k, prec))

        def third(prec):
            cc = RealInterval.exact(c, prec)
            err_nu = eval_bound(BoundKind.NU_UPPER, k, prec) - cc
            err_ups = eval_bound(BoundKind.UPSILON, k, prec) - cc
            return enclosure_compare(3 * err_nu, err_ups)

        for name, check, want in (
            ("nu(k) > C_k", upper, Ordering.GREATER),
            ("C_k > dutton(k)", lower, Ordering.GREATER),
            ("nu(k) - C_k <= (upsilon(k) - C_k)/3", third, Ordering.LESS),
        ):
            verdict, prec = decide(check, default_precision(k))
            max_prec = max(max_prec, prec)
            msg = _verdict(name, verdict, want)
            if msg:
                failures.append((k, msg))
    return VerificationReport("catalan_bounds", (k_lo, k_max), k_max - k_lo + 1, failures, max_prec)


# -- polynomial content of the proofs ---------------------------------------


class PolyVector:
    """Integer polynomial in n with coefficients in ascending powers."""

    def __init__(self, coefficients: Iterable[int]):
        cs = [int(c) for c in coefficients]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        self.coefficients = cs or [0]

    def __add__(self, other: PolyVector) -> PolyVector:
        m = max(len(self.coefficients), len(other.coefficients))
        a = self.coefficients + [0] * (m - len(self.coefficients))
        b = other.coefficients + [0] * (m - len(other.coefficients))
        return PolyVector(x + y for x, y in zip(a, b))

    def __neg__(self) -> PolyVector:
        return PolyVector(-c for c in self.coefficients)

    def __sub__(self, other: PolyVector) -> PolyVector:
        return self + (-other)

    def __mul__(self, other: PolyVector | int) -> PolyVector:
        if isinstance(other, int):
            return PolyVector(other * c for c in self.coefficients)
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return PolyVector(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> PolyVector:
        out = PolyVector([1])
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PolyVector) and self.coefficients == other.coefficients

    def __call__(self, n: int) -> int:
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * n + c
        return acc

    def __repr__(self) -> str:
        return f"PolyVector({self.coefficients})"


LEMMA2_H = PolyVector([-4, -24, -84, -91, 129, 135, 24])
LEMMA2_Q = PolyVector([0, 0, 0, 36, 108, 108, 36])
LEMMA2_R = PolyVector([4, 24, 84, 119, 83, 29, 4])
LEMMA2_J = (16, 192, 1248, 4184, 5208, -16176, -84431, -150414, -115497, -35634, -1791, 576)


def lemma2_expansion() -> PolyVector:
    """``(h.n)^2 - 4 (q.n)(r.n)`` expanded exactly."""
    return LEMMA2_H * LEMMA2_H - 4 * (LEMMA2_Q * LEMMA2_R)


def lemma2_polynomial_identity(n_max: int = 10**4) -> VerificationReport:
    """Check the 12-term expansion coefficientwise, then ``j.N > 0`` on ``13..n_max``."""
    if n_max < 13:
        raise ValueError("n_max must be >= 13")
    failures = []
    got = lemma2_expansion().coefficients
    got = got + [0] * (len(LEMMA2_J) - len(got))
    mismatches = []
    for power in range(max(len(got), len(LEMMA2_J))):
        want = LEMMA2_J[power] if power < len(LEMMA2_J) else 0
        have = got[power] if power < len(got) else 0
        if want != have:
            mismatches.append({"power": power, "expected": want, "got": have})
            failures.append((power, f"{VIOLATED}: coefficient of n^{power} is {have}, expected {want}"))
    j = PolyVector(LEMMA2_J)
    for n in range(13, n_max + 1):
        if j(n) <= 0:
            failures.append((n, f"{VIOLATED}: j.N = {j(n)} <= 0"))
    # the tail test used for n = 13: 0 < -sum_{i=6..11} j_i / 13^(12-i) < j_12
    tail = -sum(Fraction(LEMMA2_J[i - 1], 13 ** (12 - i)) for i in range(6, 12))
    tail_ok = 0 < tail < LEMMA2_J[11]
    if not tail_ok:
        failures.append((13, f"{VIOLATED}: tail bound {tail} not in (0, {LEMMA2_J[11]})"))
    details = {
        "coefficients": [str(c) for c in got],
        "mismatches": mismatches,
        "tail_bound_at_13": str(tail),
    }
    return VerificationReport("lemma2", (13, n_max), n_max - 12, failures, 0, details)


def lemma2_base_cases() -> VerificationReport:
    """Numerical base cases used in the induction for the upper bound.

    * ``S_n < sum_{k<=n} nu(k) < u(n)`` for n = 1..12
    * ``2 sum_{k<=n} nu(k) < u(n) + theta(n)`` for n = 8..12
    * ``2 S_13 + 4 S_12 < 3 u(13)``
    """
    failures = []
    max_prec = 0
    for n in range(1, 14):
        start = default_precision(n)
        checks = []
        if n <= 12:

            def nu_sum(prec, n=n):
                acc = RealInterval.exact(0, prec)
                for k in range(1, n + 1):
                    acc = acc + eval_bound(BoundKind.NU_UPPER, k, prec)
                return acc

            checks.append(
                ("S_n < sum nu(k)",
                 lambda prec, n=n: enclosure_compare(RealInterval.exact(sum_catalan(n), prec), nu_sum(prec)),
                 Ordering.LESS)
            )
            checks.append(
                ("sum nu(k) < u(n)",
                 lambda prec, n=n: enclosure_compare(nu_sum(prec), eval_bound(BoundKind.UPPER_U, n, prec)),
                 Ordering.LESS)
            )
            if n >= 8:
                checks.append(
                    ("2 sum nu(k) < u(n) + theta(n)",
                     lambda prec, n=n: enclosure_compare(
                         2 * nu_sum(prec),
                         eval_bound(BoundKind.UPPER_U, n, prec) + eval_bound(BoundKind.LOWER_THETA, n, prec)),
                     Ordering.LESS)
                )
        else:
            lhs = 2 * sum_catalan(13) + 4 * sum_catalan(12)
            checks.append(
                ("2 S_13 + 4 S_12 < 3 u(13)",
                 lambda prec: enclosure_compare(
                     RealInterval.exact(lhs, prec), 3 * eval_bound(BoundKind.UPPER_U, 13, prec)),
                 Ordering.LESS)
            )
        for name, check, want in checks:
            verdict, prec = decide(check, start)
            max_prec = max(max_prec, prec)
            msg = _verdict(name, verdict, want)
            if msg:
                failures.append((n, msg))
    return VerificationReport("lemma2_base", (1, 13), 13, failures, max_prec)


LEMMA3_LHS = 4 * PolyVector([1, 4]) ** 2 * PolyVector([-3, 6]) ** 2
LEMMA3_RHS = 9 * PolyVector([0, 1]) * PolyVector([-1, 8]) ** 2 * PolyVector([-1, 4])
LEMMA3_REDUCED = PolyVector([-4, -17, 68])


def lemma3_reduction(n_max: int) -> VerificationReport:
    """Check ``9n(8n-1)^2(4n-1) > 4(4n+1)^2(6n-3)^2`` and ``68n^2 > 17n + 4``.

    Both are evaluated exactly for ``1 <= n <= n_max`` and must agree in
    sign.  ``details["factor"]`` records the constant c with
    ``rhs - lhs == c * (68n^2 - 17n - 4)`` when such an integer exists.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    failures = []
    gap = LEMMA3_RHS - LEMMA3_LHS
    for n in range(1, n_max + 1):
        a = gap(n)
        b = LEMMA3_REDUCED(n)
        if a <= 0:
            failures.append((n, f"{VIOLATED}: 9n(8n-1)^2(4n-1) - 4(4n+1)^2(6n-3)^2 = {a}"))
        if b <= 0:
            failures.append((n, f"{VIOLATED}: 68n^2 - 17n - 4 = {b}"))
        if (a > 0) != (b > 0):
            failures.append((n, f"{VIOLATED}: reduced and unreduced forms disagree in sign"))
    factor = None
    lead = LEMMA3_REDUCED.coefficients[-1]
    if len(gap.coefficients) == len(LEMMA3_REDUCED.coefficients) and gap.coefficients[-1] % lead == 0:
        c = gap.coefficients[-1] // lead
        if gap == c * LEMMA3_REDUCED:
            factor = c
    details = {"difference": gap.coefficients, "factor": factor}
    return VerificationReport("lemma3", (1, n_max), n_max, failures, 0, details)


# -- figure data ------------------------------------------------------------


@dataclass(frozen=True)
class RatioRecord:
    n: int
    delta: RealInterval
    zeta: RealInterval
    diff_u: RealInterval  # u - S
    diff_theta: RealInterval  # S - theta
    diff_mu: RealInterval  # mu - S
    diff_cn: int  # S - C_n


def difference_table(n_lo: int, n_hi: int, precision_bits: int | None = None) -> list[RatioRecord]:
    _check_range(n_lo, n_hi)
    rows = []
    for n in range(n_lo, n_hi + 1):
        prec = precision_bits or default_precision(n)
        v = _values(n, prec)
        rows.append(
            RatioRecord(
                n=n,
                delta=delta(n, precision_bits),
                zeta=zeta(n, precision_bits),
                diff_u=v.u - v.s,
                diff_theta=v.s - v.theta,
                diff_mu=v.mu - v.s,
                diff_cn=sum_catalan(n) - catalan(n),
            )
        )
    return rows
