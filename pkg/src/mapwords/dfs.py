"""Depth-first search on rooted maps and the pattern tests for DFS-trees.

The search keeps a current flag.  At a vertex it scans the flags
``sigma(c), sigma^2(c), ...`` following the current flag ``c`` and takes the
first unvisited one (Early policy) or the last one (Late policy).  At the
start ``c`` is a dummy flag sitting just before the root, so the Early search
begins with the root flag itself and the Late search with ``sigma^-1(root)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

import networkx as nx

from .chords import diagram_of, double_occurrence_word, interlaced_pairs
from .maps import RootedMap, dual_rooted, genus, is_connected, underlying_graph
from .perm import DomainError
from .quasitree import complement, edge_set, is_spanning_tree, list_quasi_trees


class Policy(str, Enum):
    EARLY = "early"
    LATE = "late"


@dataclass(frozen=True)
class DfsResult:
    tree: frozenset[int]
    discovery: dict          # vertex id -> discovery flag (None for the root)
    order: tuple[int, ...]   # flags in the order they were visited

    def __hash__(self):
        return hash((self.tree, self.order))


def dfs(r: RootedMap, policy: Policy | str = Policy.EARLY) -> DfsResult:
    policy = Policy(policy)
    m = r.map
    if not is_connected(m):
        raise DomainError("DFS needs a connected map")
    sigma, alpha = m.sigma, m.alpha
    vof = m.vertex_of()

    root_vertex = vof[r.root]
    visited_flags: set[int] = set()
    visited_vertices = {root_vertex}
    discovery = {root_vertex: None}
    order: list[int] = []
    tree: set[int] = set()
    # None is the dummy flag preceding the root
    current = None
    vertex = root_vertex

    def scan(c):
        if c is None:
            start = r.root
            out = [start]
            b = sigma(start)
            while b != start:
                out.append(b)
                b = sigma(b)
            return out
        out = []
        b = sigma(c)
        while b != c:
            out.append(b)
            b = sigma(b)
        return out

    while True:
        free = [b for b in scan(current) if b not in visited_flags]
        if not free:
            if vertex == root_vertex:
                break
            # backtrack along the tree edge to the parent
            current = alpha(discovery[vertex])
            vertex = vof[current]
            continue
        b = free[0] if policy is Policy.EARLY else free[-1]
        visited_flags.add(b)
        order.append(b)
        current = b
        bp = alpha(b)
        if vof[bp] not in visited_vertices:
            vertex = vof[bp]
            visited_vertices.add(vertex)
            discovery[vertex] = bp
            tree.add(min(b, bp))
            visited_flags.add(bp)
            order.append(bp)
            current = bp
    return DfsResult(frozenset(tree), discovery, tuple(order))


def early_tree(r: RootedMap) -> frozenset[int]:
    return dfs(r, Policy.EARLY).tree


def late_tree(r: RootedMap) -> frozenset[int]:
    return dfs(r, Policy.LATE).tree


def tree_word(r: RootedMap, s: Iterable[int]) -> tuple[int, ...]:
    """Double occurrence word (edge ids) of the tour of ``s`` from the root."""
    return double_occurrence_word(diagram_of(r, s))


def _spanning(r: RootedMap, s) -> frozenset[int]:
    s = edge_set(r.map, s)
    if not is_spanning_tree(r.map, s):
        raise DomainError("not a spanning tree")
    return s


def is_tremaux(r: RootedMap, s: Iterable[int]) -> bool:
    """No edge outside ``s`` has both an in-neighbor and an out-neighbor in
    ``s`` in the directed interlacement of the tour word."""
    s = _spanning(r, s)
    arcs = interlaced_pairs(tree_word(r, s))
    has_in, has_out = set(), set()
    for e, f in arcs:
        if e in s and f not in s:
            has_in.add(f)
        elif f in s and e not in s:
            has_out.add(e)
    return not (has_in & has_out)


def is_tremaux_graph(r: RootedMap, s: Iterable[int]) -> bool:
    """Ancestor test on G(M): every edge joins comparable vertices of ``s``
    rooted at the root vertex."""
    s = _spanning(r, s)
    m = r.map
    vof = m.vertex_of()
    t = nx.Graph()
    t.add_nodes_from(set(vof.values()))
    t.add_edges_from((vof[e], vof[m.alpha(e)]) for e in s)
    parent = nx.predecessor(t, vof[r.root])

    def ancestors(v):
        out = {v}
        while parent[v]:
            v = parent[v][0]
            out.add(v)
        return out

    for e in m.edges():
        u, v = vof[e], vof[m.alpha(e)]
        if u not in ancestors(v) and v not in ancestors(u):
            return False
    return True


def is_early(r: RootedMap, s: Iterable[int]) -> bool:
    """Every tree edge is a source: no pattern ``f e f e`` with ``e`` in ``s``."""
    s = _spanning(r, s)
    return not any(f in s for _, f in interlaced_pairs(tree_word(r, s)))


def is_late(r: RootedMap, s: Iterable[int]) -> bool:
    """Every tree edge is a sink: no pattern ``e f e f`` with ``e`` in ``s``."""
    s = _spanning(r, s)
    return not any(e in s for e, _ in interlaced_pairs(tree_word(r, s)))


def spanning_trees(r: RootedMap) -> list[frozenset[int]]:
    return [s for s in list_quasi_trees(r.map) if is_spanning_tree(r.map, s)]


def dfs_trees(r: RootedMap) -> list[frozenset[int]]:
    """All spanning trees with the Tremaux property for this root."""
    return [s for s in spanning_trees(r) if is_tremaux(r, s)]


def is_two_connected(r: RootedMap) -> bool:
    """Loopless, at least two vertices, and no cut vertex in G(M)."""
    ug = underlying_graph(r.map)
    if ug.loops or len(ug.vertices) < 2:
        return False
    g = nx.Graph(ug.to_networkx())
    return nx.is_connected(g) and (len(g) == 2 or nx.is_biconnected(g))


@dataclass(frozen=True)
class DualityReport:
    tree: frozenset[int]
    complement: frozenset[int]
    early: bool
    late: bool
    complement_is_dfs: bool
    complement_early: bool
    complement_late: bool

    @property
    def dichotomy_holds(self) -> bool:
        pairing = ((self.early and self.complement_late)
                   or (self.late and self.complement_early))
        return self.complement_is_dfs == pairing


def check_planar_dfs_duality(r: RootedMap, s: Iterable[int]) -> DualityReport:
    if genus(r.map) != 0:
        raise DomainError("the map is not planar")
    if not is_two_connected(r):
        raise DomainError("the map is not 2-connected")
    s = _spanning(r, s)
    if not is_tremaux(r, s):
        raise DomainError("the tree is not a DFS-tree")
    rd = dual_rooted(r)
    c = complement(r.map, s)
    comp_dfs = is_tremaux(rd, c)
    return DualityReport(
        tree=s, complement=c,
        early=s == early_tree(r), late=s == late_tree(r),
        complement_is_dfs=comp_dfs,
        complement_early=c == early_tree(rd),
        complement_late=c == late_tree(rd),
    )
