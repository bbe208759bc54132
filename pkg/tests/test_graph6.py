import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trifree.bitgraph import Graph, complete_graph, cycle_graph, empty_graph, petersen_graph
from trifree.errors import MalformedInput, OrderTooLarge
from trifree.graph6 import (
    decode_graph6,
    encode_graph6,
    read_graph6_file,
    write_graph6_file,
)

from conftest import random_graph


def test_format_arithmetic_cases():
    assert encode_graph6(empty_graph(5)) == "D??"
    assert encode_graph6(complete_graph(2)) == "A_"
    assert encode_graph6(empty_graph(0)) == "?"
    assert encode_graph6(cycle_graph(4)) == "Cl"


def test_decode_known():
    assert decode_graph6("D??") == empty_graph(5)
    assert decode_graph6("A_") == complete_graph(2)
    assert decode_graph6(">>graph6<<A_") == complete_graph(2)


def test_round_trip_random_1000():
    rng = random.Random(1234)
    for _ in range(1000):
        g = random_graph(rng.randrange(0, 33), rng.choice([0.1, 0.3, 0.5, 0.9]), rng)
        assert decode_graph6(encode_graph6(g)) == g


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 40), st.randoms(use_true_random=False))
def test_round_trip_hypothesis(n, rnd):
    g = random_graph(n, rnd.random(), random.Random(rnd.randrange(2 ** 30)))
    assert decode_graph6(encode_graph6(g)) == g


def test_large_order_prefix():
    g = empty_graph(100)
    line = encode_graph6(g)
    assert line.startswith("~")
    assert decode_graph6(line) == g


def test_malformed_inputs():
    with pytest.raises(MalformedInput):
        decode_graph6("")
    with pytest.raises(MalformedInput):
        decode_graph6("D?")      # truncated body
    with pytest.raises(MalformedInput):
        decode_graph6("D???")    # overlong body
    with pytest.raises(MalformedInput):
        decode_graph6("A" + chr(200))
    with pytest.raises(OrderTooLarge):
        decode_graph6(encode_graph6(empty_graph(100)), max_vertices=64)


def test_file_round_trip(tmp_path):
    graphs = [cycle_graph(5), petersen_graph(), empty_graph(1)]
    path = tmp_path / "gs.g6"
    assert write_graph6_file(path, graphs) == 3
    assert list(read_graph6_file(path)) == graphs


def test_file_skips_comments_and_blanks(tmp_path):
    path = tmp_path / "gs.g6"
    path.write_text("# leading comment\nD??\n\nA_\n")
    assert list(read_graph6_file(path)) == [empty_graph(5), complete_graph(2)]
