import random

import pytest

from trifree.bitgraph import (
    DegreeHistogram,
    Graph,
    clebsch_graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    degree_histogram,
    disjoint_union,
    empty_graph,
    from_edges,
    induced_subgraph,
    is_triangle_free,
    max_edge_bound,
    path_graph,
    petersen_graph,
    residual,
    star_graph,
    z_value,
)
from trifree.errors import InvalidGraph, OrderTooLarge

from conftest import random_graph


def test_graph_validation():
    Graph(3, [0b010, 0b101, 0b010])
    with pytest.raises(InvalidGraph):
        Graph(3, [0b010, 0b100, 0b010])  # asymmetric
    with pytest.raises(InvalidGraph):
        Graph(2, [0b01, 0b10])  # self loop
    with pytest.raises(InvalidGraph):
        Graph(2, [0b100, 0])  # bit beyond order
    with pytest.raises(OrderTooLarge):
        Graph(200, [0] * 200)


def test_triangle_free():
    assert not is_triangle_free(complete_graph(3))
    assert is_triangle_free(cycle_graph(5))
    assert is_triangle_free(petersen_graph())
    assert is_triangle_free(complete_bipartite(3, 3))
    assert not is_triangle_free(complete_graph(4))


def test_residual_c5():
    r = residual(cycle_graph(5), 0)
    assert r.n == 2 and r.edge_count() == 1  # the two distance-2 vertices


def test_residual_star_center():
    assert residual(star_graph(4), 0).n == 0


def test_residual_preserves_vertex_order():
    g = path_graph(6)
    r = residual(g, 0)  # drops 0 and 1, keeps 2..5 in order
    assert r.n == 4
    assert list(r.edges()) == [(0, 1), (1, 2), (2, 3)]


def test_z_value():
    c5 = cycle_graph(5)
    assert all(z_value(c5, v) == 4 for v in range(5))
    pet = petersen_graph()
    assert all(z_value(pet, v) == 9 for v in range(10))  # 3-regular: d^2
    st = star_graph(4)
    assert z_value(st, 0) == 4
    assert z_value(st, 1) == 4


def test_degree_histogram():
    assert degree_histogram(cycle_graph(5)).as_dict() == {2: 5}
    assert degree_histogram(star_graph(4)).as_dict() == {1: 4, 4: 1}
    assert degree_histogram(clebsch_graph()).as_dict() == {5: 16}
    h = degree_histogram(path_graph(4))
    assert h.n == 4 and h.edge_count == 3


def test_degree_histogram_invariants():
    with pytest.raises(InvalidGraph):
        DegreeHistogram((0, 3))  # odd degree sum
    with pytest.raises(InvalidGraph):
        DegreeHistogram((-1, 0))


def test_max_edge_bound():
    assert max_edge_bound(10, 36) == 162
    assert max_edge_bound(11, 44) == 220
    assert max_edge_bound(3, 5) == 5


def test_clebsch():
    g = clebsch_graph()
    assert g.n == 16 and g.edge_count() == 40
    assert is_triangle_free(g)


def test_induced_subgraph():
    g = cycle_graph(6)
    sub = induced_subgraph(g, 0b000111)
    assert sub.n == 3 and sub.edge_count() == 2


def test_disjoint_union_and_from_edges():
    g = disjoint_union(path_graph(2), path_graph(2))
    assert g.n == 4 and g.edge_count() == 2
    h = from_edges(4, [(0, 1), (2, 3)])
    assert g == h


def test_residual_of_ramsey_graph_is_ramsey_one_size_down(j5_censuses):
    # deleting a closed neighborhood steps the avoided pattern down one
    # size and removes exactly the neighbor-degree-sum many edges
    from trifree.patterns import Pattern, is_ramsey_graph

    for g in j5_censuses[9]:
        e = g.edge_count()
        for v in range(g.n):
            r = residual(g, v)
            assert r.n == g.n - g.degree(v) - 1
            assert r.edge_count() == e - z_value(g, v)
            assert is_ramsey_graph(r, Pattern.j(4))


def test_ramsey_graphs_respect_degree_and_edge_caps(j5_censuses):
    for n in (8, 9, 10):
        for g in j5_censuses[n]:
            assert g.max_degree() <= 4
            assert g.edge_count() <= max_edge_bound(5, n)


def test_vertex_deletion_monotonicity(j5_censuses):
    from trifree.canon import canonical_form
    from trifree.bitgraph import bits

    keys = {m: {canonical_form(g) for g in j5_censuses[m]} for m in (7, 8)}
    for g in j5_censuses[8]:
        full = (1 << 8) - 1
        for v in range(8):
            sub = induced_subgraph(g, full & ~(1 << v))
            assert canonical_form(sub) in keys[7]


def test_random_graphs_roundtrip_rows():
    rng = random.Random(42)
    for _ in range(50):
        g = random_graph(rng.randrange(1, 20), 0.3, rng)
        again = Graph(g.n, g.rows)
        assert again == g and hash(again) == hash(g)
