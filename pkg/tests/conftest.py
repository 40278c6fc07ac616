import pytest

from ndes.datasets import load_karate
from ndes.graph import Graph

# a=0, b=1, c=2, d=3, e=4 throughout


@pytest.fixture
def triangle():
    return Graph.from_edges([(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def path3():
    return Graph.from_edges([(0, 1), (1, 2)])


@pytest.fixture
def k4():
    return Graph.from_edges([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


@pytest.fixture
def star():
    # center 0 with leaves 1, 2, 3
    return Graph.from_edges([(0, 1), (0, 2), (0, 3)])


@pytest.fixture
def k4_pendant():
    """K4 on {b, c, d, e} plus node a joined to b and c."""
    return Graph.from_edges([(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4), (0, 1), (0, 2)])


@pytest.fixture
def two_triangles():
    """Triangles {0,1,2} and {3,4,5} joined by the bridge 2-3."""
    return Graph.from_edges([(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])


@pytest.fixture(scope="session")
def karate():
    return load_karate()


# one summary line per acceptance criterion
_acceptance: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _acceptance[report.nodeid] = report.outcome.upper()


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, outcome in _acceptance.items():
        name = nodeid.split("::")[-1]
        terminalreporter.write_line(f"{'PASS' if outcome == 'PASSED' else 'FAIL'}  {name}")
