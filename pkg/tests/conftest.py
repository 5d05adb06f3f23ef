import mpmath
import numpy as np
import pytest


def mp_weight(mu, k):
    """h_mu(k, 0) from the Gamma-quotient definition, in extended precision."""
    return mpmath.rf(k, mu) / mpmath.gamma(mu + 1)


def mp_rl_difference(u, alpha, t):
    """Riemann-Liouville nabla difference at t straight from the definition."""
    with mpmath.workdps(30):
        total = mpmath.mpf(0)
        for s in range(t + 1):
            total += mpmath.rf(t - s + 1, -alpha - 1) * u[s]
        return float(total / mpmath.gamma(-alpha))


@pytest.fixture
def rng():
    return np.random.default_rng(20261018)


_acceptance = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "acceptance" in report.keywords:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))
    elif report.when == "setup" and report.outcome != "passed" and "acceptance" in report.keywords:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{status}] {name}")
