import warnings

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from intcolor import (
    DimacsWarning,
    Graph,
    GraphFormatError,
    gen_gnp,
    gen_named,
    load_dimacs,
    load_edge_list,
    max_degree,
    serialize_dimacs,
    serialize_edge_list,
)
from intcolor.rng import SplitMix64


def assert_simple(g: Graph) -> None:
    for v, nbrs in enumerate(g.adjacency):
        assert v not in nbrs
        assert list(nbrs) == sorted(set(nbrs))
        for u in nbrs:
            assert v in g.adjacency[u]
    assert 2 * g.m == sum(len(a) for a in g.adjacency)


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


class TestDimacs:
    def test_triangle(self):
        g = load_dimacs("p edge 3 3\ne 1 2\ne 2 3\ne 1 3")
        assert (g.n, g.m) == (3, 3)
        assert g.adjacency == ((1, 2), (0, 2), (0, 1))

    def test_edgeless(self):
        g = load_dimacs(b"p edge 2 0\n")
        assert (g.n, g.m) == (2, 0)

    def test_duplicates_collapse_with_warning(self):
        with pytest.warns(DimacsWarning):
            g = load_dimacs("p edge 3 4\ne 1 2\ne 2 1\ne 2 3\ne 1 3")
        assert g == load_dimacs("p edge 3 3\ne 1 2\ne 2 3\ne 1 3")

    def test_comments_and_col_variant(self):
        g = load_dimacs("c hello\nc\np col 2 1\n\ne 1 2\n")
        assert g.m == 1

    @pytest.mark.parametrize(
        "text",
        [
            "e 1 2",
            "p edge 2 1\np edge 2 1\ne 1 2",
            "p edge 2 1\ne 1 3",
            "p edge 2 1\ne 0 1",
            "p edge 2 1\ne 1 1",
            "p edge 2 1\ne 1 x",
            "p edge 2 1\nq 1 2",
            "c only comments",
        ],
    )
    def test_errors(self, text):
        with pytest.raises(GraphFormatError):
            load_dimacs(text)

    def test_no_warning_when_counts_agree(self):
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            load_dimacs("p edge 2 1\ne 1 2\n")


class TestEdgeList:
    def test_path(self):
        g = load_edge_list("0 1\n1 2")
        assert (g.n, g.m) == (3, 2)

    def test_header_isolated(self):
        g = load_edge_list("n=4\n")
        assert (g.n, g.m) == (4, 0)

    def test_dedup(self):
        assert load_edge_list("0 1\n0 1").m == 1
        assert load_edge_list("0 1\n1 0").m == 1

    def test_empty(self):
        assert load_edge_list("").n == 0

    @pytest.mark.parametrize("text", ["0 a", "-1 2", "2 2", "n=2\n0 5", "0 1 2"])
    def test_errors(self, text):
        with pytest.raises(GraphFormatError):
            load_edge_list(text)


class TestGenerators:
    def test_gnp_extremes(self):
        assert gen_gnp(5, 0.0, 1).m == 0
        g = gen_gnp(5, 1.0, 1)
        assert g.m == 10
        assert g == gen_named("complete", 5)

    def test_gnp_pinned(self):
        # regression value, pinned on first run
        assert gen_gnp(30, 0.2, 42).m == 87

    def test_gnp_reproducible(self):
        assert gen_gnp(40, 0.3, 7) == gen_gnp(40, 0.3, 7)
        assert gen_gnp(40, 0.3, 7) != gen_gnp(40, 0.3, 8)

    def test_gnp_uses_one_draw_per_pair(self):
        rng = SplitMix64(3)
        expected = [(i, j) for i in range(6) for j in range(i + 1, 6) if rng.next_float() < 0.5]
        assert list(gen_gnp(6, 0.5, 3).edges()) == expected

    @pytest.mark.parametrize("bad", [-0.1, 1.5])
    def test_gnp_bad_p(self, bad):
        with pytest.raises(ValueError):
            gen_gnp(4, bad, 0)

    def test_named(self):
        assert gen_named("complete", 4).m == 6
        c5 = gen_named("cycle", 5)
        assert c5.m == 5 and all(c5.degree(v) == 2 for v in range(5))
        assert nx.is_isomorphic(to_nx(c5), nx.cycle_graph(5))
        assert nx.is_isomorphic(to_nx(gen_named("path", 4)), nx.path_graph(4))
        assert nx.is_isomorphic(to_nx(gen_named("star", 7)), nx.star_graph(6))

    def test_petersen(self):
        g = gen_named("petersen", 0)
        assert (g.n, g.m) == (10, 15)
        assert all(g.degree(v) == 3 for v in range(10))
        assert nx.is_isomorphic(to_nx(g), nx.petersen_graph())

    def test_named_errors(self):
        with pytest.raises(ValueError):
            gen_named("cycle", 2)
        with pytest.raises(ValueError):
            gen_named("complete", 0)
        with pytest.raises(ValueError):
            gen_named("wheel", 5)


class TestGraph:
    def test_max_degree(self):
        assert max_degree(gen_named("complete", 4)) == 3
        assert max_degree(gen_gnp(5, 0.0, 0)) == 0
        assert max_degree(gen_named("star", 7)) == 6
        assert max_degree(Graph(0, ())) == 0

    def test_constructor_rejects_bad_adjacency(self):
        with pytest.raises(ValueError):
            Graph(2, ((1,), ()))
        with pytest.raises(ValueError):
            Graph(1, ((0,),))
        with pytest.raises(ValueError):
            Graph(3, ((2, 1), (0,), (0,)))
        with pytest.raises(ValueError):
            Graph.from_edges(2, [(0, 0)])

    def test_connectivity(self):
        assert gen_named("path", 4).is_connected()
        assert not gen_gnp(4, 0.0, 0).is_connected()


edge_lists = st.integers(min_value=0, max_value=12).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(
            st.tuples(st.integers(0, max(n - 1, 0)), st.integers(0, max(n - 1, 0))),
            max_size=40,
        ).map(lambda es: [(u, v) for u, v in es if u != v]),
    )
)


@settings(max_examples=150, deadline=None)
@given(edge_lists)
def test_round_trips(spec):
    n, edges = spec
    g = Graph.from_edges(n, edges)
    assert_simple(g)
    assert load_dimacs(serialize_dimacs(g)) == g
    assert load_edge_list(serialize_edge_list(g)) == g
    assert set(g.edges()) == {(min(e), max(e)) for e in edges}


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 25), st.floats(0, 1), st.integers(0, 2**64 - 1))
def test_gnp_is_simple_and_deterministic(n, p, seed):
    g = gen_gnp(n, p, seed)
    assert_simple(g)
    assert g == gen_gnp(n, p, seed)
