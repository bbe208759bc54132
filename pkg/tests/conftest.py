import random

import pytest

from trifree.bitgraph import Graph
from trifree.enumeration import CensusBuilder
from trifree.patterns import Pattern


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph.from_rows(n, rows)


def random_triangle_free(n: int, tries: int, rng: random.Random) -> Graph:
    rows = [0] * n
    for _ in range(tries):
        u, v = rng.sample(range(n), 2)
        if rows[u] >> v & 1 or rows[u] & rows[v]:
            continue
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph.from_rows(n, rows)


def permuted_copy(g: Graph, rng: random.Random) -> Graph:
    per = list(range(g.n))
    rng.shuffle(per)
    rows = [0] * g.n
    for u, v in g.edges():
        rows[per[u]] |= 1 << per[v]
        rows[per[v]] |= 1 << per[u]
    return Graph.from_rows(g.n, rows)


@pytest.fixture(scope="session")
def j4_builder():
    return CensusBuilder(Pattern.j(4))


@pytest.fixture(scope="session")
def j5_builder():
    return CensusBuilder(Pattern.j(5))


@pytest.fixture(scope="session")
def j5_censuses(j5_builder):
    """Order -> list of all (3,J5;order) graphs, orders 1..11."""
    out = {0: [Graph(0, [])]}
    for m in range(1, 12):
        out[m] = [Graph.from_rows(m, rows) for rows in j5_builder.level(m).values()]
    return out


@pytest.fixture(scope="session")
def j4_censuses(j4_builder):
    out = {0: [Graph(0, [])]}
    for m in range(1, 8):
        out[m] = [Graph.from_rows(m, rows) for rows in j4_builder.level(m).values()]
    return out
