import pytest

from cubic_reembed.dual import build_dual
from cubic_reembed.generators import cube, dodecahedron, prism, tetrahedron

ACCEPTANCE_RESULTS: dict[str, tuple[bool, str]] = {}


@pytest.fixture(scope="session")
def k4():
    return tetrahedron()


@pytest.fixture(scope="session")
def cube_map():
    return cube()


@pytest.fixture(scope="session")
def prism3():
    return prism(3)


@pytest.fixture(scope="session")
def prism5():
    return prism(5)


@pytest.fixture(scope="session")
def dodeca():
    return dodecahedron()


@pytest.fixture(scope="session")
def k4_dual(k4):
    return build_dual(k4)


@pytest.fixture(scope="session")
def octahedron(cube_map):
    return build_dual(cube_map)


@pytest.fixture(scope="session")
def bipyramid(prism3):
    return build_dual(prism3)


@pytest.fixture(scope="session")
def icosahedron(dodeca):
    return build_dual(dodeca)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS, key=lambda s: int(s.split()[0][2:])):
        ok, detail = ACCEPTANCE_RESULTS[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
