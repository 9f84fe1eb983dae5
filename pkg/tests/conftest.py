import pytest

from baxterlab import oracle
from baxterlab.planemap import PlaneMap, RootedMap


def rooted(m: PlaneMap, s: int, t: int) -> RootedMap:
    """Root dart s->t with the outer face on its left."""
    for d in m.rotations[s]:
        if m.head(d) == t and m.face_of[m.opp[d]] == m.outer_face:
            return RootedMap(m, d)
    raise AssertionError("no outer dart from s to t")


def double_edge() -> RootedMap:
    m = PlaneMap.from_rotations([["a", "b"], ["b", "a"]], (0, "a"))
    return rooted(m, 0, 1)


def triangle() -> RootedMap:
    m = PlaneMap.from_embedding([(0, 0), (1, -2), (2, 0)], [(0, 1), (1, 2), (0, 2)], (2, 0))
    return rooted(m, 0, 2)


@pytest.fixture
def four_cycle():
    return oracle.four_cycle()


@pytest.fixture
def cube():
    return oracle.cube()


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.REPORT:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(mod.REPORT):
        terminalreporter.write_line(mod.REPORT[number])
