from itertools import combinations

import pytest

from singular_bgg.weights import Weight


def rho_like_family(max_n=10):
    """(mu, k) for every rho-like seed with some values doubled, all admissible k."""
    out = []
    for n in range(2, max_n + 1):
        for l in range(n // 2 + 1):
            for doubled in combinations(range(n - l), l):
                coords = sorted(list(range(n - l)) + list(doubled), reverse=True)
                for k in range(max(l, 1), n // 2 + 1):
                    out.append((Weight(tuple(coords)), k))
    return out


@pytest.fixture(scope="session")
def family():
    return rho_like_family(10)


_acceptance = []


def pytest_runtest_logreport(report):
    if "test_acceptance" in report.nodeid and report.when == "call":
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))
    elif "test_acceptance" in report.nodeid and report.when == "setup" and report.outcome != "passed":
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  {name}")
