"""Exact Catalan numbers, their prefix sums and the 4*C_n/3 lower bound.

Everything here is integer or rational arithmetic; nothing is rounded.
Indexing starts at 1, so ``C_0`` is never exposed.

The memo table is shared by every caller in the process.  Reads are
lock-free; extension is serialized by a lock and published entries are
never modified, so concurrent use from several threads is safe.
"""

from __future__ import annotations

import threading
from fractions import Fraction

from .report import VIOLATED, VerificationReport


class ExactSequence:
    """Memoized ``C_1..C_max`` and ``S_1..S_max``.

    Lists are 1-based (slot 0 holds a placeholder) and only ever grow.
    """

    def __init__(self) -> None:
        self._catalan = [1]  # slot 0 is C_0, kept only to seed the recurrence
        self._prefix = [0]
        self._lock = threading.Lock()

    @property
    def max_index(self) -> int:
        return len(self._catalan) - 1

    def extend_to(self, k: int) -> None:
        if k <= self.max_index:
            return
        with self._lock:
            cat = self._catalan
            pre = self._prefix
            c, s = cat[-1], pre[-1]
            new_c, new_s = [], []
            for j in range(len(cat), k + 1):
                # (j+1) always divides 2(2j-1) C_{j-1}
                c = 2 * (2 * j - 1) * c // (j + 1)
                s += c
                new_c.append(c)
                new_s.append(s)
            # append prefix sums last so readers never see S_j without C_j
            cat.extend(new_c)
            pre.extend(new_s)

    def catalan(self, k: int) -> int:
        self.extend_to(k)
        return self._catalan[k]

    def prefix_sum(self, n: int) -> int:
        self.extend_to(n)
        return self._prefix[n]

    def catalan_range(self, lo: int, hi: int) -> list[int]:
        self.extend_to(hi)
        return self._catalan[lo : hi + 1]

    def prefix_range(self, lo: int, hi: int) -> list[int]:
        self.extend_to(hi)
        return self._prefix[lo : hi + 1]


_SEQUENCE = ExactSequence()


def sequence() -> ExactSequence:
    return _SEQUENCE


def _check_index(name: str, k: int, least: int = 1) -> None:
    if not isinstance(k, int) or isinstance(k, bool):
        raise TypeError(f"{name} must be an int, got {type(k).__name__}")
    if k < least:
        raise ValueError(f"{name} must be >= {least}, got {k}")


def catalan(k: int) -> int:
    """Return the k-th Catalan number ``binomial(2k, k) / (k + 1)``, k >= 1."""
    _check_index("k", k)
    return _SEQUENCE.catalan(k)


def sum_catalan(n: int) -> int:
    """Return ``S_n = C_1 + ... + C_n``."""
    _check_index("n", n)
    return _SEQUENCE.prefix_sum(n)


def ell(n: int) -> Fraction:
    """Lower bound ``4 C_n / 3`` on ``S_n``, in lowest terms."""
    _check_index("n", n)
    return Fraction(4 * catalan(n), 3)


def recurrence_residual(n: int) -> int:
    """``(n+1) S_n + (1-5n) S_{n-1} - 2(1-2n) S_{n-2}``; zero for every n >= 3."""
    _check_index("n", n, least=3)
    s2, s1, s0 = _SEQUENCE.prefix_range(n - 2, n)
    return (n + 1) * s0 + (1 - 5 * n) * s1 - 2 * (1 - 2 * n) * s2


def verify_sum_recurrence(n_max: int) -> VerificationReport:
    """Check the three-term recurrence for the prefix sums on ``3..n_max``."""
    _check_index("n_max", n_max, least=3)
    failures = []
    for n in range(3, n_max + 1):
        r = recurrence_residual(n)
        if r != 0:
            failures.append((n, f"{VIOLATED}: residual {r}"))
    return VerificationReport("recurrence", (3, n_max), n_max - 2, failures)


def verify_lemma1(n_lo: int, n_hi: int) -> VerificationReport:
    """Check ``4 C_n / 3 < S_n`` exactly, together with its two proof steps.

    For every n in range: ``S_n < 4 S_{n-1}`` (for n >= 2) and
    ``4 C_{n-1} - C_n = 3 C_n / (2n - 1) > 0``.
    """
    _check_index("n_lo", n_lo)
    if n_hi < n_lo:
        raise ValueError(f"empty range [{n_lo}, {n_hi}]")
    failures = []
    for n in range(n_lo, n_hi + 1):
        s = sum_catalan(n)
        c = catalan(n)
        if not 4 * c < 3 * s:
            failures.append((n, f"{VIOLATED}: 4*C_n/3 >= S_n"))
            continue
        if n >= 2:
            c_prev = catalan(n - 1)
            gap = 4 * c_prev - c
            if gap * (2 * n - 1) != 3 * c or gap <= 0:
                failures.append((n, f"{VIOLATED}: 4*C_(n-1) - C_n != 3*C_n/(2n-1)"))
            elif not s < 4 * sum_catalan(n - 1):
                failures.append((n, f"{VIOLATED}: S_n >= 4*S_(n-1)"))
    return VerificationReport("lemma1", (n_lo, n_hi), n_hi - n_lo + 1, failures)
