import pytest

from pmhkit.graph import (Graph, build_complete, build_complete_bipartite, build_cycle,
                          build_hypercube, build_path, cylinder, torus)


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner, label="Petersen")


def heawood():
    cyc = [(i, (i + 1) % 14) for i in range(14)]
    chords = [(i, (i + 5) % 14) for i in range(0, 14, 2)]
    return Graph(14, cyc + chords, label="Heawood")


def corpus():
    """Test graphs with at most 14 vertices."""
    return [
        build_complete(4), build_complete(6), build_complete(8),
        build_complete_bipartite(3, 3), build_complete_bipartite(4, 4),
        build_hypercube(2), build_hypercube(3),
        build_cycle(4), build_cycle(6), build_cycle(8), build_cycle(10),
        build_path(2), build_path(6),
        cylinder(3, 2), cylinder(4, 2), cylinder(5, 2), cylinder(6, 2), cylinder(7, 2),
        cylinder(3, 4), cylinder(4, 3),
        torus(3, 4), torus(4, 3),
        petersen(), heawood(),
    ]


def small_corpus(max_n=12):
    return [g for g in corpus() if g.n <= max_n]


@pytest.fixture(scope="session")
def graph_corpus():
    return corpus()


# (criterion number, title, passed, detail) rows printed after the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for num, title, ok, detail in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(
            f"criterion {num:2d} {'PASS' if ok else 'FAIL'}  {title}: {detail}")
