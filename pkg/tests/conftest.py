from __future__ import annotations

import random

import pytest

from coxgraph.graph import INF, CoxeterGraph

ACCEPTANCE_RESULTS: dict[int, tuple[bool, str]] = {}


def random_graph(rng: random.Random, max_vertices=8, labels=(3, 4, 5, 6, 7, 8, 9, INF),
                 density=0.35, min_vertices=0) -> CoxeterGraph:
    n = rng.randint(min_vertices, max_vertices)
    verts = [f"x{i}" for i in range(n)]
    rng.shuffle(verts)
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < density:
                edges.append((verts[i], verts[j], rng.choice(labels)))
    return CoxeterGraph(verts, edges)


def random_connected_graph(rng: random.Random, max_vertices=7, labels=(3, 4, 5, 6, 7, INF),
                           extra=0.2) -> CoxeterGraph:
    n = rng.randint(1, max_vertices)
    verts = [f"y{i}" for i in range(n)]
    edges = {}
    for i in range(1, n):
        j = rng.randrange(i)
        edges[frozenset((verts[i], verts[j]))] = rng.choice(labels)
    for i in range(n):
        for j in range(i + 1, n):
            key = frozenset((verts[i], verts[j]))
            if key not in edges and rng.random() < extra:
                edges[key] = rng.choice(labels)
    order = verts[:]
    rng.shuffle(order)
    return CoxeterGraph(order, edges)


def triangle(a=5, b=5, c=5) -> CoxeterGraph:
    return CoxeterGraph(["a", "b", "c"], [("a", "b", a), ("b", "c", b), ("a", "c", c)])


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def five_triangle():
    return triangle()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
