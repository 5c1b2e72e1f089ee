import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from plg import MultiGraph, ParseError, degree_sequence, is_independent, read_graph, write_graph

from conftest import random_multigraph


def test_triangle_degrees():
    g = MultiGraph(3, [(0, 1), (1, 2), (0, 2)])
    assert degree_sequence(g) == [2, 2, 2]


def test_self_loop_counts_two():
    g = MultiGraph(1, {(0, 0): 1})
    assert degree_sequence(g) == [2]


def test_multiplicity_sums():
    g = MultiGraph(2, {(0, 1): 3})
    assert degree_sequence(g) == [3, 3]


def test_handshake_random():
    rng = random.Random(11)
    for _ in range(50):
        g = random_multigraph(rng, rng.randint(1, 12), rng.randint(0, 20))
        assert sum(degree_sequence(g)) == 2 * g.total_multiplicity()


def test_independence_examples():
    k3 = MultiGraph(3, [(0, 1), (1, 2), (0, 2)])
    assert is_independent(k3, [0])
    assert not is_independent(k3, [0, 1])
    looped = MultiGraph(1, {(0, 0): 1})
    assert not is_independent(looped, [0])


def test_independence_monotone():
    rng = random.Random(5)
    for _ in range(30):
        g = random_multigraph(rng, 8, 10)
        members = [v for v in range(8) if rng.random() < 0.5]
        if is_independent(g, members):
            for drop in members:
                assert is_independent(g, [v for v in members if v != drop])


def test_independence_rejects_bad_vertex():
    g = MultiGraph(2, [(0, 1)])
    with pytest.raises(ValueError):
        is_independent(g, [5])


def test_read_examples():
    g = read_graph("p plg 2 1\ne 0 1 3\n")
    assert degree_sequence(g) == [3, 3]
    g = read_graph("p plg 1 1\ne 0 0 1\n")
    assert degree_sequence(g) == [2]


@pytest.mark.parametrize(
    "text, line",
    [
        ("p plg 2 1\ne 0 5 1\n", 2),  # endpoint out of range
        ("p plg 2 1\ne 1 0 1\n", 2),  # endpoints out of order
        ("p plg 2 1\ne 0 1 0\n", 2),  # non-positive multiplicity
        ("p plg 2 1\ne 0 1\n", 2),  # malformed line
        ("p plg 2 2\ne 0 1 1\ne 0 1 2\n", 3),  # duplicate edge
        ("e 0 1 1\n", 1),  # missing header
        ("p plg 2 1\nz 0 1 1\n", 2),  # unknown line type
    ],
)
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as err:
        read_graph(text)
    assert err.value.line_no == line


def test_round_trip_seeded_100_vertices():
    rng = random.Random(42)
    g = random_multigraph(rng, 100, 300)
    g.labels[3] = "embedded"
    g.labels[7] = "residual-G1"
    text = write_graph(g)
    again = read_graph(text)
    assert again == g
    assert write_graph(again) == text


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 10), st.data())
def test_round_trip_property(n, data):
    pair = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
    raw = data.draw(st.dictionaries(pair, st.integers(1, 4), max_size=12))
    edges = {}
    for (u, v), m in raw.items():
        key = (min(u, v), max(u, v))
        edges[key] = edges.get(key, 0) + m
    g = MultiGraph(n, edges)
    assert read_graph(write_graph(g)) == g
