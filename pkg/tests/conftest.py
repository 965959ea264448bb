import math
from fractions import Fraction

import pytest


def catalan_binomial(k):
    return math.comb(2 * k, k) // (k + 1)


def catalan_product(k):
    out = Fraction(1)
    for i in range(k - 1):
        out *= Fraction(2 * k - i, k - i)
    return out


@pytest.fixture(scope="session")
def brute_sums():
    """S_1..S_300 by direct summation of the binomial formula."""
    sums, acc = [0], 0
    for k in range(1, 301):
        acc += catalan_binomial(k)
        sums.append(acc)
    return sums


ACCEPTANCE = {}


@pytest.fixture
def criterion():
    """Marks a test as an acceptance criterion; see pytest_runtest_makereport."""


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.failed):
        ACCEPTANCE[marker.args[0]] = ("PASS" if report.passed else "FAIL", item.name)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        verdict, name = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number:2d}: {verdict}  ({name})")
