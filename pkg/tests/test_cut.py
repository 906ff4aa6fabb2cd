from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from intcolor import (
    Coloring,
    Partition,
    SolveConfig,
    cut_size,
    exact_max_cut,
    gen_gnp,
    gen_named,
    integrated_coloring,
    k_max_cut,
    mixed_edge_floor,
    mixed_edge_lower_bound,
    mixing_number,
    partition_from_coloring,
)

K3 = gen_named("complete", 3)
C4 = gen_named("cycle", 4)
K4 = gen_named("complete", 4)


def test_partition_from_coloring():
    assert partition_from_coloring(Coloring(2, (1, 1, 2))).parts == ((0, 1), (2,))
    assert partition_from_coloring(Coloring(3, (1, 1, 1))).parts == ((0, 1, 2), (), ())
    part = partition_from_coloring(Coloring(2, (1, 2, 1, 2)))
    assert part.parts == ((0, 2), (1, 3))
    assert cut_size(C4, part) == 4


def test_cut_size():
    assert cut_size(K3, Partition(2, ((0, 1), (2,)))) == 2
    assert cut_size(K3, Partition(2, ((0, 1, 2), ()))) == 0
    assert cut_size(K4, Partition(2, ((0, 1), (2, 3)))) == 4


@pytest.mark.parametrize(
    "parts",
    [((0, 1), ()), ((0, 1), (1, 2)), ((0, 1), (2, 5))],
)
def test_cut_size_rejects_bad_partitions(parts):
    with pytest.raises(ValueError):
        cut_size(K3, Partition(2, parts))


def test_partition_part_count():
    with pytest.raises(ValueError):
        Partition(3, ((0,), (1,)))


def test_partition_json():
    part = Partition(3, ((2, 0), (1,), ()))
    assert part.to_json() == '{"k": 3, "parts": [[0, 2], [1], []]}'
    assert Partition.from_json(part.to_json()) == part


def test_lower_bound():
    assert mixed_edge_lower_bound(3, 2) == Fraction(3, 2)
    assert mixed_edge_floor(3, 2) == 2
    assert mixed_edge_lower_bound(0, 5) == 0
    assert mixed_edge_lower_bound(10, 3) == Fraction(20, 3)
    assert mixed_edge_floor(6, 4) == 5
    with pytest.raises(ValueError):
        mixed_edge_lower_bound(3, 1)


@given(st.integers(0, 500), st.integers(2, 30))
def test_lower_bound_monotone_in_k(m, k):
    assert mixed_edge_lower_bound(m, k) <= mixed_edge_lower_bound(m, k + 1)
    assert mixed_edge_floor(m, k) == -(-(k - 1) * m // k)


def test_k_max_cut_examples():
    part, size = k_max_cut(K3, 2)
    assert size == 2 and size >= mixed_edge_floor(3, 2)
    _, size = k_max_cut(C4, 2)
    assert 2 <= size <= exact_max_cut(C4, 2) == 4
    _, size = k_max_cut(K4, 4)
    assert size >= 5
    assert size == 6 == exact_max_cut(K4, 4)
    part, size = k_max_cut(gen_gnp(5, 0.0, 0), 3)
    assert size == 0 and part.k == 3


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 30), st.floats(0, 1), st.integers(0, 2**32), st.integers(2, 6), st.integers(0, 2**32))
def test_cut_equals_mixing_and_meets_bound(n, prob, gseed, k, iseed):
    g = gen_gnp(n, prob, gseed)
    c, _ = integrated_coloring(g, k, SolveConfig(init="random", seed=iseed))
    assert cut_size(g, partition_from_coloring(c)) == mixing_number(g, c)
    assert mixing_number(g, c) >= mixed_edge_floor(g.m, k)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 12), st.floats(0, 1), st.integers(0, 2**32), st.data())
def test_cut_equals_mixing_any_coloring(n, prob, gseed, data):
    g = gen_gnp(n, prob, gseed)
    k = data.draw(st.integers(1, 5))
    colors = data.draw(st.lists(st.integers(1, k), min_size=n, max_size=n))
    c = Coloring(k, tuple(colors))
    assert cut_size(g, partition_from_coloring(c)) == mixing_number(g, c)
