import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mobtax import (
    CutSpec,
    edge_fraction,
    generate_ba,
    GrowthConfig,
    mean_neighbour_degree,
    normalized_time,
    snapshot,
    snapshots,
    stream_from_pairs,
)
from mobtax.snapshot import included_edge_count, neighbour_degree_sums


@pytest.fixture
def ten_edges():
    return stream_from_pairs([(f"n{i}", f"n{i + 1}", i * 10) for i in range(11)][1:])


def test_cutspec_validation():
    for bad in (0, -0.1, 1.5):
        with pytest.raises(ValueError):
            edge_fraction(bad)
    with pytest.raises(ValueError):
        CutSpec("weekly", 0.5)


def test_edge_fraction_floor(ten_edges):
    assert snapshot(ten_edges, edge_fraction(0.5)).included_edges == 5
    assert snapshot(ten_edges, edge_fraction(0.05)).included_edges == 1
    assert snapshot(ten_edges, edge_fraction(0.99)).included_edges == 9


def test_fraction_rounding_guard(worked_stream):
    # 4/6 * 6 is 3.9999999999999996 in binary floating point
    assert included_edge_count(worked_stream, edge_fraction(4 / 6)) == 4


def test_normalized_time():
    s = stream_from_pairs([(f"a{i}", f"b{i}", t) for i, t in enumerate([0, 10, 25, 26, 60, 100])])
    assert snapshot(s, normalized_time(0.25)).included_edges == 3
    assert snapshot(s, normalized_time(1.0)).included_edges == 6


def test_normalized_time_awkward_floats():
    s = stream_from_pairs([("a", "b", 0.1), ("b", "c", 0.2), ("c", "d", 0.3)])
    assert snapshot(s, normalized_time(1.0)).included_edges == 3
    assert snapshot(s, normalized_time(0.5)).included_edges == 2


def test_constant_time_stream():
    s = stream_from_pairs([("a", "b", 5), ("b", "c", 5)])
    assert snapshot(s, normalized_time(0.1)).included_edges == 2


def test_identity_cut(ten_edges):
    v = snapshot(ten_edges, edge_fraction(1.0))
    assert v.included_edges == 10
    assert v.node_count == 11


def test_full_cuts_agree():
    s = generate_ba(GrowthConfig(60, 2, seed=3))
    a = snapshot(s, edge_fraction(1.0))
    b = snapshot(s, normalized_time(1.0))
    assert a.included_edges == b.included_edges == s.edge_count
    assert np.array_equal(a.degrees, b.degrees)


def test_star_mean_neighbour_degree():
    s = stream_from_pairs([("c", "x", 1), ("c", "y", 2), ("c", "z", 3)])
    v = snapshot(s, edge_fraction(1.0))
    assert mean_neighbour_degree(v, "c") == 1.0
    assert mean_neighbour_degree(v, "x") == 3.0


def test_triangle_mean_neighbour_degree():
    s = stream_from_pairs([("a", "b", 1), ("b", "c", 2), ("a", "c", 3)])
    v = snapshot(s, edge_fraction(1.0))
    assert [mean_neighbour_degree(v, u) for u in "abc"] == [2.0, 2.0, 2.0]


def test_absent_node(worked_stream):
    v = snapshot(worked_stream, edge_fraction(0.5))
    with pytest.raises(KeyError):
        mean_neighbour_degree(v, "e")
    with pytest.raises(KeyError):
        mean_neighbour_degree(v, "nope")


def test_view_structure(worked_stream):
    v = snapshot(worked_stream, edge_fraction(4 / 6))
    assert v.degree_map() == {"a": 3, "b": 2, "c": 2, "d": 1}
    assert v.adjacency[worked_stream.index_of("a")] == {1, 2, 3}


def test_vectorized_neighbour_sums_match_adjacency():
    s = generate_ba(GrowthConfig(80, 3, seed=11))
    v = snapshot(s, edge_fraction(0.6))
    sums = neighbour_degree_sums(v)
    for u in v.nodes:
        assert sums[u] == sum(v.degrees[w] for w in v.adjacency[int(u)])


def test_snapshots_preserve_request_order(ten_edges):
    vs = snapshots(ten_edges, [edge_fraction(0.9), edge_fraction(0.2), edge_fraction(0.9)])
    assert [v.included_edges for v in vs] == [9, 2, 9]
    single = snapshot(ten_edges, edge_fraction(0.2))
    assert np.array_equal(vs[1].degrees, single.degrees)


@given(
    st.integers(0, 10_000),
    st.lists(st.floats(0.01, 1.0), min_size=2, max_size=8),
    st.sampled_from(["edge_fraction", "normalized_time"]),
)
@settings(max_examples=60, deadline=None)
def test_nested_cuts_and_handshake(seed, values, mode):
    rng = np.random.default_rng(seed)
    pairs = [(str(rng.integers(15)), str(rng.integers(15)), float(rng.integers(50))) for _ in range(40)]
    pairs.append(("p", "q", 0.0))
    s = stream_from_pairs(pairs)
    values = sorted(values)
    views = snapshots(s, [CutSpec(mode, x) for x in values])
    for v in views:
        assert v.degrees.sum() == 2 * v.included_edges
        assert np.all(v.degrees[v.nodes] >= 1)
    for lo, hi in zip(views, views[1:]):
        assert lo.included_edges <= hi.included_edges
        assert np.all(lo.degrees <= hi.degrees)
