import networkx as nx
import pytest
from hypothesis import given, settings

from mapwords.chords import diagram_of, interlacement, pivot_graph
from mapwords.layout import check_layout, gf2_rank, handle_reduction, layout
from mapwords.maps import RootedMap
from mapwords.perm import DomainError
from mapwords.quasitree import list_quasi_trees
from mapwords.sampling import rooted_map_census
from strategies import planar_maps, rooted_quasi_trees


def test_planar_spanning_tree(digon):
    lay = layout(RootedMap(digon, 0), [0])
    assert lay.genus == lay.tree_genus == 0
    assert lay.inside.polygon_sides == lay.outside.polygon_sides == 0
    assert lay.inside.chords == (0,) and lay.outside.chords == (2,)
    assert not check_layout(lay)


def test_torus_full_quasi_tree(torus):
    lay = layout(RootedMap(torus, 0), [0, 1])
    assert lay.inside.polygon_sides == 4 and lay.outside.polygon_sides == 0
    assert lay.interior_dual_vertices == 1
    assert lay.inside.side_pairs() == [(0, 2), (1, 3)]
    assert [(h.first, h.second) for h in lay.inside.handles] == [(0, 1)]


def test_loop_empty(loop):
    lay = layout(RootedMap(loop, 0), [])
    assert lay.inside.polygon_sides == lay.outside.polygon_sides == 0
    assert lay.outside.chords == (0,) and lay.inside.chords == ()


def test_rejects_non_quasi_tree(torus):
    with pytest.raises(DomainError):
        layout(RootedMap(torus, 0), [0])


def test_record_keys(theta):
    rec = layout(RootedMap(theta, 0), [2]).to_record()
    assert set(rec) == {"circle", "edges", "genus", "tree_genus", "inside",
                        "outside", "interior_dual_vertices"}


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
def test_census(m):
    for r in rooted_map_census(m):
        for s in list_quasi_trees(r.map):
            lay = layout(r, s)
            assert not check_layout(lay)
            assert lay.interior_dual_vertices == len(s) - 2 * lay.tree_genus + 1


@settings(max_examples=60)
@given(rooted_quasi_trees(max_edges=6))
def test_random_layouts(rs):
    r, s = rs
    lay = layout(r, s)
    assert not check_layout(lay)
    g = interlacement(diagram_of(r, s))
    for side in (lay.inside, lay.outside):
        # independent genus: half the GF(2) rank of the interlacement matrix
        idx = {v: i for i, v in enumerate(side.chords)}
        rows = [sum(1 << idx[u] for u in g[v] if u in idx) for v in side.chords]
        assert gf2_rank(rows) == 2 * side.genus
        # residual chords are pairwise non-crossing once handles are cut
        h = g.subgraph(side.chords).copy()
        for hd in side.handles:
            h = pivot_graph(h, hd.first, hd.second)
            h.remove_nodes_from((hd.first, hd.second))
        assert h.number_of_edges() == 0 and sorted(h) == list(side.residual)


@settings(max_examples=30)
@given(planar_maps(max_edges=7))
def test_planar_layouts_have_no_polygons(g):
    r = RootedMap(g, 0)
    for s in list_quasi_trees(g):
        lay = layout(r, s)
        assert lay.inside.polygon_sides == lay.outside.polygon_sides == 0
        assert not lay.inside.handles and not lay.outside.handles


def test_handle_reduction_on_k4():
    pairs, rest = handle_reduction(nx.complete_graph(4))
    assert pairs[0] == (0, 1) and len(pairs) == gf2_rank([0b1110, 0b1101, 0b1011, 0b0111]) // 2
    assert rest == []
