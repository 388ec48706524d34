import pytest

from syzygy import MonomialIdeal, SimplicialComplex

from suites import ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def run_ideal():
    return MonomialIdeal.parse("ac bc ad bd ae be cde", "abcde")


@pytest.fixture
def run_dual():
    """Alexander dual of N(run ideal): the complement of every generator."""
    return SimplicialComplex.from_names(["bde", "ade", "bce", "ace", "bcd", "acd", "ab"], "abcde")


@pytest.fixture
def gamma4():
    """Two components: an edge and a hollow triangle."""
    return SimplicialComplex.from_names(["ab", "cd", "ce", "de"], "abcde")


@pytest.fixture
def pentagon():
    return SimplicialComplex.from_names([("x1", "x2"), ("x2", "x3"), ("x3", "x4"), ("x4", "x5"), ("x1", "x5")],
                                        ["x1", "x2", "x3", "x4", "x5"])


@pytest.fixture
def xy_ideal():
    return MonomialIdeal.parse("xy ac bd", "abcdxy")


@pytest.fixture
def degree3_ideal():
    return MonomialIdeal.parse("abc ace ade bcd bde", "abcde")


@pytest.fixture
def disconnected():
    return SimplicialComplex.from_names(["uv", "xy", "yz", "xz"], "uvxyz")
