import sys
import random

import pytest

from lefschetz.corpus import circle, closed_triangle, hexagon_doubling, simplex_boundary


@pytest.fixture
def rng():
    return random.Random(1234)


@pytest.fixture
def c3():
    return circle(3)


@pytest.fixture
def c4():
    return circle(4)


@pytest.fixture
def triangle():
    return closed_triangle()


@pytest.fixture
def sphere():
    return simplex_boundary(3)


@pytest.fixture
def doubling():
    return hexagon_doubling()


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
