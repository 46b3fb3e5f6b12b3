import sys

import pytest

from digitopo import minimal_sphere, random_sphere, torus_grid
from digitopo.generators import cycle, wheel


@pytest.fixture(scope="session")
def octahedron():
    return minimal_sphere(2)


@pytest.fixture(scope="session")
def torus44():
    return torus_grid(4, 4)


@pytest.fixture(scope="session")
def sphere_corpus():
    """Seeded random 2-spheres from 6 up to 12 points."""
    return [random_sphere(2, k, s)[0] for k in range(0, 7) for s in range(3)]


@pytest.fixture(scope="session")
def small_spaces():
    return [cycle(4), cycle(5), cycle(6), wheel(4), wheel(5), minimal_sphere(1), minimal_sphere(2)]


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(mod.RESULTS):
            terminalreporter.write_line(line)
