import networkx as nx
import pytest
from hypothesis import given, settings

from mapwords.dfs import late_tree
from mapwords.maps import RootedMap
from mapwords.poset import (
    binary_key, build_poset, expected_maximum, poset_maximum, poset_minimum,
    quasi_tree_key,
)
from mapwords.sampling import rooted_map_census
from strategies import rooted_maps


def test_binary_key_examples():
    assert binary_key("abab", "ab") == (1, 1)
    assert binary_key("abab", "a") == (1, 0)
    assert binary_key("aabb", "") == (0, 0)
    assert binary_key("baab", "a") == (0, 1)


def test_loop_poset(loop):
    p = build_poset(RootedMap(loop, 0))
    assert p.elements == (frozenset(),) and not p.covers


def test_torus_chain(torus):
    r = RootedMap(torus, 0)
    assert quasi_tree_key(r, []) == (0, 0)
    assert quasi_tree_key(r, [0, 1]) == (1, 1)
    p = build_poset(r)
    assert p.to_record() == {"elements": [[], [0, 1]], "covers": [[[], [0, 1]]]}
    assert poset_minimum(r) == frozenset() == late_tree(r)
    assert poset_maximum(r) == {0, 1}


def test_digon(digon):
    r = RootedMap(digon, 0)
    p = build_poset(r)
    assert len(p.elements) == 2 and len(p.covers) == 1
    assert poset_minimum(r) == late_tree(r)
    assert p.leq(poset_minimum(r), poset_maximum(r))


@pytest.mark.parametrize("m", [1, 2, 3])
def test_extremes_census(m):
    for r in rooted_map_census(m):
        p = build_poset(r)
        assert not p.ties
        assert p.minimal() == [late_tree(r)]
        assert p.maximal() == [expected_maximum(r)]


@settings(max_examples=40)
@given(rooted_maps(max_edges=7))
def test_extremes_random(r):
    p = build_poset(r)
    assert not p.ties
    assert nx.is_weakly_connected(p.graph())
    assert poset_minimum(r) == late_tree(r)
    assert poset_maximum(r) == expected_maximum(r)
    for i, j in p.covers:
        assert len(p.elements[i] ^ p.elements[j]) == 2
        assert p.keys[i] < p.keys[j]
