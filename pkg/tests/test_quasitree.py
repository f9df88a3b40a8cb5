from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from mapwords.chords import sandwich
from mapwords.maps import (
    RootedMap, canonical_code, components, dual, empty_map, genus, is_connected,
    underlying_graph,
)
from mapwords.perm import DomainError, Permutation, restrict
from mapwords.quasitree import (
    complement, contract, count_quasi_trees, delete, is_bridge, is_quasi_tree,
    is_separating_loop, is_spanning_tree, iter_subsets, list_quasi_trees,
    quasi_tree_genus, tour,
)
from strategies import general_maps, maps, planar_maps


def spanning_tree_count(g):
    """Brute force over (V-1)-subsets of edges of G(M), acyclicity by networkx."""
    ug = underlying_graph(g)
    nv = len(ug.vertices)
    count = 0
    for sub in combinations([e for e, _ in ug.edges], nv - 1):
        h = nx.MultiGraph()
        h.add_nodes_from(v[0] for v in ug.vertices)
        h.add_edges_from(ug.ends[e] for e in sub)
        count += nx.is_tree(h)
    return count


def kirchhoff(g):
    h = underlying_graph(g).to_networkx()
    h.remove_edges_from(list(nx.selfloop_edges(h)))
    return round(nx.number_of_spanning_trees(h)) if len(h) > 1 else 1


def canonical_any_root(g):
    return min(canonical_code(RootedMap(g, b)) for b in g.flags)


def test_tour_examples(loop, digon):
    assert tour(loop, []) == loop.sigma
    assert tour(loop, [0]) == Permutation.identity(range(2))
    assert tour(digon, [0]) == Permutation.from_cycles([(0, 3, 1, 2)])


def test_is_quasi_tree_examples(loop, torus):
    assert is_quasi_tree(torus, [0, 1])
    assert not is_quasi_tree(torus, [0])
    assert not is_quasi_tree(loop, [0])
    assert is_quasi_tree(loop, [])


def test_quasi_tree_genus_examples(loop, torus, digon):
    assert quasi_tree_genus(digon, [0]) == 0
    assert quasi_tree_genus(torus, [0, 1]) == 1
    assert quasi_tree_genus(loop, []) == 0
    with pytest.raises(DomainError):
        quasi_tree_genus(torus, [0])


def test_bridges_and_separating_loops(link, loop, torus):
    assert is_bridge(link, 0) and not is_separating_loop(link, 0)
    assert is_separating_loop(loop, 0) and not is_bridge(loop, 0)
    assert not is_bridge(torus, 0) and not is_separating_loop(torus, 0)
    assert not is_bridge(torus, 1) and not is_separating_loop(torus, 1)


def test_delete_examples(digon, torus, link, loop):
    d = delete(digon, 2)
    assert d.flags == (0, 1) and genus(d) == 0 and d.sigma.num_cycles() == 2
    assert canonical_any_root(delete(torus, 1)) == canonical_any_root(loop)
    with pytest.raises(DomainError):
        delete(link, 0)


def test_contract_examples(link, loop, torus):
    c = contract(link, 0)
    assert len(c.sigma) == 0
    with pytest.raises(DomainError):
        contract(loop, 0)
    # a non-separating loop splits its vertex: the result is the link
    assert canonical_any_root(contract(torus, 0)) == canonical_any_root(link)


def test_count_examples(link, loop, torus, digon):
    assert count_quasi_trees(link) == 1
    assert count_quasi_trees(loop) == 1
    assert count_quasi_trees(torus) == 2
    assert list_quasi_trees(torus) == [frozenset(), frozenset({0, 1})]
    assert count_quasi_trees(digon) == 2
    assert list_quasi_trees(digon) == [frozenset({0}), frozenset({2})]
    assert count_quasi_trees(empty_map()) == 1


def test_bad_edge_ids(torus):
    with pytest.raises(DomainError):
        tour(torus, [3])
    with pytest.raises(DomainError):
        delete(torus, 2)


@settings(max_examples=60)
@given(maps(max_edges=6))
def test_complement_duality(g):
    d = dual(g)
    for s in iter_subsets(g):
        assert is_quasi_tree(g, s) == is_quasi_tree(d, complement(g, s))


@given(general_maps(max_edges=4))
def test_quasi_tree_exists_iff_connected(g):
    assert bool(list_quasi_trees(g)) == is_connected(g)


@settings(max_examples=60)
@given(maps(max_edges=6))
def test_parity_and_bridges(g):
    n = g.sigma.num_cycles()
    qts = list_quasi_trees(g)
    for s in qts:
        assert (len(s) - (n - 1)) % 2 == 0
    for e in g.edges():
        assert is_bridge(g, e) == all(e in s for s in qts)
        assert is_separating_loop(g, e) == all(e not in s for s in qts)


@settings(max_examples=60)
@given(maps(max_edges=6))
def test_deletion_contraction_count(g):
    assert count_quasi_trees(g) == len(list_quasi_trees(g))


@settings(max_examples=60)
@given(maps(max_edges=6), st.data())
def test_minors_transport_quasi_trees(g, data):
    e = data.draw(st.sampled_from(g.edges()))
    qts = list_quasi_trees(g)
    if not is_bridge(g, e):
        dg = delete(g, e)
        keep = dg.sigma.domain
        for s in qts:
            if e not in s:
                assert tour(dg, s) == restrict(tour(g, s), keep)
                assert is_quasi_tree(dg, s)
    if not is_separating_loop(g, e):
        cg = contract(g, e)
        assert cg == dual(delete(dual(g), e))
        for s in qts:
            if e in s:
                assert is_quasi_tree(cg, s - {e})


@settings(max_examples=60)
@given(maps(min_edges=2, max_edges=6), st.data())
def test_minors_commute(g, data):
    e, f = data.draw(st.lists(st.sampled_from(g.edges()), min_size=2, max_size=2, unique=True))
    try:
        a = delete(contract(g, f), e)
        b = contract(delete(g, e), f)
    except DomainError:
        pass
    else:
        assert a == b
    try:
        a, b = delete(delete(g, e), f), delete(delete(g, f), e)
    except DomainError:
        pass
    else:
        assert a == b
    try:
        a, b = contract(contract(g, e), f), contract(contract(g, f), e)
    except DomainError:
        pass
    else:
        assert a == b


@settings(max_examples=60)
@given(maps(max_edges=6), st.data())
def test_sandwich(g, data):
    s = data.draw(st.sampled_from(list_quasi_trees(g)))
    r = RootedMap(g, g.flags[0])
    s0, s1 = sandwich(r, s)
    assert s0 <= s <= s1
    assert is_spanning_tree(g, s0)
    assert is_spanning_tree(dual(g), complement(g, s1))


@settings(max_examples=60)
@given(planar_maps(max_edges=7))
def test_planar_quasi_trees_are_spanning_trees(g):
    qts = list_quasi_trees(g)
    assert all(is_spanning_tree(g, s) for s in qts)
    assert count_quasi_trees(g) == spanning_tree_count(g) == kirchhoff(g)
