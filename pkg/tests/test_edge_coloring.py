import pytest
from hypothesis import given
from hypothesis import strategies as st

from _oracles import dealt_sizes, edge_colorable
from conftest import SMALL_CUBIC, cubic_graphs
from coronacolor.catalog import named
from coronacolor.edge_coloring import (EdgeColoring, TargetInfeasible, equitable_edge_color,
                                       lemma1_target_sequence, vizing_color)
from coronacolor.graph import build_graph


# brute-force chromatic indices, computed once by the naive oracle
@pytest.mark.parametrize("name,chi", [("k4", 3), ("k33", 3), ("petersen", 4)])
def test_chromatic_index_oracle(name, chi):
    g = named(name)
    edges = list(g.edges)
    assert not edge_colorable(g.order, edges, chi - 1)
    assert edge_colorable(g.order, edges, chi)


@pytest.mark.parametrize("name,palette", [("k4", 3), ("k33", 3), ("petersen", 4)])
def test_vizing_palette(name, palette):
    g = named(name)
    c = vizing_color(g)
    assert c.is_proper(g)
    assert c.palette_size == palette


@pytest.mark.parametrize("entry", SMALL_CUBIC, ids=lambda e: e.name)
def test_vizing_small_catalog(entry):
    c = vizing_color(entry.graph)
    assert c.is_proper(entry.graph)
    assert c.palette_size in (3, 4)


@given(cubic_graphs(max_order=60))
def test_vizing_cubic_proper(g):
    c = vizing_color(g)
    assert c.is_proper(g)
    assert c.palette_size <= 4


@given(st.integers(2, 10), st.data())
def test_vizing_general_simple_graphs(n, data):
    pairs = data.draw(st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=40))
    g = build_graph(n, sorted({tuple(sorted(p)) for p in pairs if p[0] != p[1]}))
    c = vizing_color(g)
    assert c.is_proper(g)
    assert c.palette_size <= g.max_degree() + 1


@pytest.mark.parametrize("m,k,expected", [
    (6, 8, (1, 1, 1, 1, 1, 1, 0, 0)),
    (9, 10, (1, 1, 1, 1, 1, 1, 1, 1, 1, 0)),
    (6, 1, (6,)),
])
def test_target_sequence_examples(m, k, expected):
    assert dealt_sizes(m, k) == expected
    assert lemma1_target_sequence(m, k) == expected


@given(st.integers(0, 200), st.integers(1, 40))
def test_target_sequence_matches_dealing(m, k):
    seq = lemma1_target_sequence(m, k)
    assert seq == dealt_sizes(m, k)
    assert sum(seq) == m and max(seq) - min(seq) <= 1
    assert list(seq) == sorted(seq, reverse=True)


def test_equitable_k4_singletons():
    g = named("k4")
    c = equitable_edge_color(g, (1, 1, 1, 1, 1, 1, 0, 0))
    assert c.is_proper(g)
    assert c.class_sizes == (1, 1, 1, 1, 1, 1, 0, 0)


def test_equitable_k4_three_matchings():
    g = named("k4")
    c = equitable_edge_color(g, (2, 2, 2))
    assert c.is_proper(g)
    classes = {}
    for e, col in c.assignment.items():
        classes.setdefault(col, set()).add(e)
    perfect = {frozenset({(0, 1), (2, 3)}), frozenset({(0, 2), (1, 3)}), frozenset({(0, 3), (1, 2)})}
    assert {frozenset(s) for s in classes.values()} == perfect


def test_equitable_prism_five_colours():
    g = named("prism")
    # the naive oracle confirms a proper 5-edge-colouring exists at all
    assert edge_colorable(g.order, list(g.edges), 5)
    c = equitable_edge_color(g, (2, 2, 2, 2, 1))
    assert c.is_proper(g)
    assert c.class_sizes == (2, 2, 2, 2, 1)


def test_equitable_rejects_bad_targets():
    g = named("k4")
    with pytest.raises(ValueError):
        equitable_edge_color(g, (3, 2, 1))
    with pytest.raises(ValueError):
        equitable_edge_color(g, (2, 2, 1))
    with pytest.raises(TargetInfeasible):
        equitable_edge_color(named("petersen"), (5, 5, 5))


def test_rebalancing_from_lopsided_start():
    g = named("k33")
    base = EdgeColoring(vizing_color(g).assignment, 3)
    c = equitable_edge_color(g, lemma1_target_sequence(9, 7), base=base, check=True)
    assert c.class_sizes == (2, 2, 1, 1, 1, 1, 1)


@pytest.mark.parametrize("entry", SMALL_CUBIC, ids=lambda e: e.name)
@pytest.mark.parametrize("k", range(4, 13))
def test_equitable_catalog_all_k(entry, k):
    g = entry.graph
    target = lemma1_target_sequence(g.n_edges, k)
    c = equitable_edge_color(g, target, check=True)
    assert c.is_proper(g)
    assert c.class_sizes == target


@given(cubic_graphs(max_order=40), st.integers(4, 16))
def test_equitable_random_cubic(g, k):
    target = lemma1_target_sequence(g.n_edges, k)
    c = equitable_edge_color(g, target)
    assert c.is_proper(g) and c.class_sizes == target
