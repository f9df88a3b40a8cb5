"""Combinatorial data for drawing a map around the tour circle of a quasi-tree.

The tour of a quasi-tree ``S`` is drawn as a circle carrying every flag.
Chords of ``S`` go inside the circle and the other chords outside.  Each side
then forms a one-vertex map (the circle shrunk to a point).  The inside map has
genus ``g_S`` and needs a ``4 g_S``-gon with paired sides; the outside map has
genus ``g - g_S`` and needs a ``4 (g - g_S)``-gon.  Handles are found by
repeated pivot reduction of the interlacement graph, smallest pair first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import networkx as nx

from .chords import diagram_of, interlaced_pairs, pivot_graph
from .maps import Map, RootedMap, euler, genus
from .perm import DomainError, Permutation
from .quasitree import edge_set, is_quasi_tree, quasi_tree_genus


@dataclass(frozen=True)
class Handle:
    first: int
    second: int
    sides: tuple[int, int, int, int]   # polygon sides a, b, a', b' in order

    def to_record(self) -> dict:
        return {"chords": [self.first, self.second], "sides": list(self.sides)}


@dataclass(frozen=True)
class Side:
    """One side of the circle: its chords, one-vertex map and polygon."""

    chords: tuple[int, ...]
    genus: int
    polygon_sides: int
    handles: tuple[Handle, ...]
    residual: tuple[int, ...]          # chords left once handles are removed
    faces: int

    def side_pairs(self) -> list[tuple[int, int]]:
        return [p for h in self.handles for p in ((h.sides[0], h.sides[2]),
                                                  (h.sides[1], h.sides[3]))]

    def to_record(self) -> dict:
        return {
            "chords": list(self.chords),
            "genus": self.genus,
            "polygon_sides": self.polygon_sides,
            "side_pairs": [list(p) for p in self.side_pairs()],
            "handles": [h.to_record() for h in self.handles],
            "residual": list(self.residual),
            "faces": self.faces,
        }


@dataclass(frozen=True)
class PolygonLayout:
    circle: tuple[int, ...]            # flags in tour order from the root
    edge_of: tuple[int, ...]           # edge id of each circle position
    genus: int
    tree_genus: int
    inside: Side
    outside: Side

    @property
    def interior_dual_vertices(self) -> int:
        return self.inside.faces

    def to_record(self) -> dict:
        return {
            "circle": list(self.circle),
            "edges": list(self.edge_of),
            "genus": self.genus,
            "tree_genus": self.tree_genus,
            "inside": self.inside.to_record(),
            "outside": self.outside.to_record(),
            "interior_dual_vertices": self.interior_dual_vertices,
        }


def one_vertex_map(circle: Sequence[int], alpha: Permutation, chords: Iterable[int]) -> Map:
    """Shrink the circle to a point, keeping only the given chords."""
    keep = set(chords)
    flags = [b for b in circle if min(b, alpha(b)) in keep]
    sigma = {b: flags[(i + 1) % len(flags)] for i, b in enumerate(flags)}
    return Map(Permutation(sigma), Permutation({b: alpha(b) for b in flags}))


def handle_reduction(g: nx.Graph) -> tuple[list[tuple[int, int]], list[int]]:
    """Repeatedly take the smallest interlaced pair ``(e, f)`` and replace the
    graph by its pivot on ``ef`` minus ``e`` and ``f``.  Returns the pairs and
    the vertices left over (which are then pairwise non-adjacent)."""
    g = g.copy()
    pairs = []
    while g.number_of_edges():
        e, f = min(tuple(sorted(uv)) for uv in g.edges())
        pairs.append((e, f))
        g = pivot_graph(g, e, f)
        g.remove_nodes_from((e, f))
    return pairs, sorted(g)


def _side(circle, alpha, word, chords: Iterable[int]) -> Side:
    chords = tuple(sorted(chords))
    cs = set(chords)
    g = nx.Graph()
    g.add_nodes_from(chords)
    g.add_edges_from((e, f) for e, f in interlaced_pairs(word) if e in cs and f in cs)
    pairs, residual = handle_reduction(g)
    handles = tuple(Handle(e, f, tuple(range(4 * i, 4 * i + 4)))
                    for i, (e, f) in enumerate(pairs))
    m = one_vertex_map(circle, alpha, chords)
    eu = euler(m)
    return Side(chords, eu.genus, 4 * eu.genus, handles, tuple(residual), eu.faces)


def layout(r: RootedMap, s: Iterable[int]) -> PolygonLayout:
    m = r.map
    s = edge_set(m, s)
    if not is_quasi_tree(m, s):
        raise DomainError("layout needs a quasi-tree")
    d = diagram_of(r, s)
    eo = d.edge_of()
    word = tuple(eo[b] for b in d.word)
    rest = frozenset(m.edges()) - s
    inside = _side(d.word, m.alpha, word, s)
    outside = _side(d.word, m.alpha, word, rest)
    return PolygonLayout(d.word, word, genus(m), quasi_tree_genus(m, s), inside, outside)


def gf2_rank(rows: list[int]) -> int:
    """Rank over GF(2) of a matrix given as integer bitmasks."""
    rank = 0
    rows = list(rows)
    while rows:
        pivot = rows.pop()
        if not pivot:
            continue
        rank += 1
        low = pivot & -pivot
        rows = [x ^ pivot if x & low else x for x in rows]
    return rank


def check_layout(lay: PolygonLayout) -> list[str]:
    """Consistency checks; returns the list of violated statements."""
    bad = []
    ins, out = lay.inside, lay.outside
    if ins.genus != lay.tree_genus:
        bad.append("inside map genus differs from the quasi-tree genus")
    if out.genus != lay.genus - lay.tree_genus:
        bad.append("outside map genus differs from g - g_S")
    for name, side in (("inside", ins), ("outside", out)):
        if len(side.handles) != side.genus:
            bad.append(f"{name}: handle count {len(side.handles)} != genus {side.genus}")
        if side.polygon_sides % 4:
            bad.append(f"{name}: polygon side count not a multiple of 4")
        used = {x for h in side.handles for x in (h.first, h.second)}
        if used & set(side.residual) or used | set(side.residual) != set(side.chords):
            bad.append(f"{name}: handles and residual do not partition the chords")
    if ins.faces != len(ins.chords) - 2 * lay.tree_genus + 1:
        bad.append("interior dual vertex count differs from |S| - 2 g_S + 1")
    return bad
