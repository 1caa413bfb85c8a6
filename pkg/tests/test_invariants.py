import pytest
from hypothesis import given, settings, strategies as st

from oracle import naive_edge_connectivity, naive_vertex_connectivity
from pathconn.graphs import Graph, InputError, complete, complete_bipartite, cycle, net, path, star
from pathconn.invariants import connectivity, edge_connectivity, k_connectivity_cut, min_degree


@st.composite
def small_graphs(draw, n_min=1, n_max=6):
    n = draw(st.integers(n_min, n_max))
    pool = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if pool:
        edges = draw(st.lists(st.sampled_from(pool), unique=True,
                              max_size=len(pool)))
    else:
        edges = []
    return Graph(n, tuple(edges))


def test_known_connectivity_values():
    assert connectivity(complete(5)) == 4
    assert connectivity(complete(1)) == 0
    assert connectivity(cycle(6)) == 2
    assert connectivity(path(5)) == 1
    assert connectivity(star(4)) == 1
    assert connectivity(complete_bipartite(2, 4)) == 2
    assert connectivity(net()) == 1
    assert connectivity(Graph(4, ((0, 1), (2, 3)))) == 0


def test_known_edge_connectivity_values():
    assert edge_connectivity(complete(5)) == 4
    assert edge_connectivity(complete(1)) == 0
    assert edge_connectivity(cycle(6)) == 2
    assert edge_connectivity(complete_bipartite(3, 5)) == 3
    assert edge_connectivity(net()) == 1
    assert edge_connectivity(Graph(3, ((0, 1),))) == 0


def test_min_degree():
    assert min_degree(complete(4)) == 3
    assert min_degree(Graph(1)) == 0
    assert min_degree(net()) == 1
    with pytest.raises(InputError):
        min_degree(Graph(0))


@settings(max_examples=120, deadline=None)
@given(small_graphs())
def test_connectivity_matches_cut_oracle(g):
    assert connectivity(g) == naive_vertex_connectivity(g)


@settings(max_examples=120, deadline=None)
@given(small_graphs())
def test_edge_connectivity_matches_cut_oracle(g):
    assert edge_connectivity(g) == naive_edge_connectivity(g)


@settings(max_examples=80, deadline=None)
@given(small_graphs(n_min=2))
def test_edge_connectivity_between_connectivity_and_min_degree(g):
    assert connectivity(g) <= edge_connectivity(g) <= min_degree(g)


def test_cut_version_on_complete_graphs():
    # removing vertices until fewer than k remain is the only option
    for n in range(2, 7):
        for k in range(2, n + 1):
            assert k_connectivity_cut(complete(n), k) == n - k + 1


def test_cut_version_equals_connectivity_at_two():
    for g in (cycle(5), path(4), net(), complete_bipartite(2, 3)):
        assert k_connectivity_cut(g, 2) == connectivity(g)


def test_cut_version_is_not_monotone_in_k():
    values = [k_connectivity_cut(path(4), k) for k in (2, 3, 4)]
    assert values == [1, 2, 1]


def test_cut_version_returns_witness_cut():
    size, cut = k_connectivity_cut(net(), 3, with_cut=True)
    assert size == 2 and len(cut) == 2
    from pathconn.graphs import components
    g = net()
    left = g.n - size
    assert left < 3 or len(components(g, set(cut))) >= 3


def test_cut_version_argument_validation():
    with pytest.raises(InputError):
        k_connectivity_cut(net(), 0)
    with pytest.raises(InputError):
        k_connectivity_cut(Graph(0), 2)
