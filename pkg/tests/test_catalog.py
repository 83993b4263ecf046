import pytest
from hypothesis import given
from hypothesis import strategies as st

from _oracles import girth
from coronacolor.catalog import (OrderOdd, UnknownName, UnsupportedOrder, all_cubic, catalog_names,
                                 is_isomorphic, named, random_cubic)
from coronacolor.graph import build_graph, is_bridgeless


def test_named_basics():
    k4 = named("k4")
    assert (k4.order, k4.n_edges) == (4, 6)
    k33 = named("k33")
    assert k33.n_edges == 9
    # bipartite: 2-colourable by BFS parity
    side = {0: 0}
    todo = [0]
    while todo:
        u = todo.pop()
        for w in k33.adjacency[u]:
            if w not in side:
                side[w] = 1 - side[u]
                todo.append(w)
            assert side[w] != side[u]


def test_petersen_girth():
    p = named("petersen")
    assert p.order == 10
    assert girth(p.order, list(p.edges)) == 5


def test_heawood_girth():
    h = named("heawood")
    assert h.order == 14 and girth(h.order, list(h.edges)) == 6


@pytest.mark.parametrize("name", catalog_names())
def test_catalog_entries_cubic(name):
    assert named(name).is_cubic()


def test_unknown_name():
    with pytest.raises(UnknownName):
        named("tesseract")


@pytest.mark.parametrize("order,count", [(4, 1), (6, 2), (8, 5)])
def test_all_cubic_counts(order, count):
    graphs = all_cubic(order)
    assert len(graphs) == count
    for g in graphs:
        assert g.is_cubic() and g.order == order
        assert len(g.components()) == 1
    for i, a in enumerate(graphs):
        for b in graphs[i + 1:]:
            assert not is_isomorphic(a, b)


def test_all_cubic_6_contents():
    k33, prism = all_cubic(6)
    assert is_isomorphic(k33, named("k33"))
    assert is_isomorphic(prism, named("prism"))


def test_all_cubic_8_contains_cube_and_wagner():
    graphs = all_cubic(8)
    assert any(is_isomorphic(g, named("cube")) for g in graphs)
    assert any(is_isomorphic(g, named("wagner")) for g in graphs)
    # the only disconnected cubic graph on 8 vertices is excluded from the count
    assert not any(is_isomorphic(g, named("two_k4")) for g in graphs)


def test_small_cubic_graphs_are_bridgeless():
    for n in (4, 6, 8):
        assert all(is_bridgeless(g) for g in all_cubic(n))


def test_unsupported_order():
    with pytest.raises(UnsupportedOrder):
        all_cubic(10)


def test_isomorphism_detects_relabelling():
    g = named("petersen")
    perm = [3, 7, 1, 9, 0, 5, 2, 8, 6, 4]
    h = build_graph(10, [(perm[u], perm[v]) for u, v in g.edges])
    assert is_isomorphic(g, h)
    assert not is_isomorphic(g, named("pentagonal_prism"))


def test_random_cubic_four_is_k4():
    assert random_cubic(4, 11).edges == named("k4").edges


def test_random_cubic_odd():
    with pytest.raises(OrderOdd):
        random_cubic(7, 0)


def test_random_cubic_10_42():
    g = random_cubic(10, 42)
    assert g.order == 10 and g.is_cubic()


@given(st.integers(2, 30), st.integers(0, 10**6))
def test_random_cubic_valid_and_deterministic(half, seed):
    g = random_cubic(2 * half, seed)
    assert g.is_cubic() and g.n_edges == 3 * half
    assert random_cubic(2 * half, seed) == g
