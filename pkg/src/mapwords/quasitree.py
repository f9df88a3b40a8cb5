"""Tours of edge subsets, quasi-trees, and edge deletion/contraction.

A subset ``S`` of edges is a quasi-tree when its tour ``sigma * alpha_S``
is a single cycle.  Edge subsets are frozensets of edge ids (the smaller flag
of each edge).  Minors keep the surviving flags' labels.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator

from .maps import Map, RootedMap, canonical_code, dual, map_from_code
from .perm import DomainError, Permutation, restrict

MAX_LIST_EDGES = 24


def edge_set(m: Map, edges: Iterable[int]) -> frozenset[int]:
    s = frozenset(edges)
    valid = set(m.edges())
    bad = sorted(s - valid)
    if bad:
        raise DomainError(f"not edge ids of the map: {bad}")
    return s


def tour(m: Map, s: Iterable[int]) -> Permutation:
    s = edge_set(m, s)
    sig, alp = m.sigma, m.alpha
    img = {}
    for b in m.flags:
        if min(b, alp(b)) in s:
            img[b] = sig(alp(b))
        else:
            img[b] = sig(b)
    return Permutation(img)


def is_quasi_tree(m: Map, s: Iterable[int]) -> bool:
    # the flagless map has the empty set as its only quasi-tree
    return tour(m, s).num_cycles() <= 1


def quasi_tree_genus(m: Map, s: Iterable[int]) -> int:
    s = edge_set(m, s)
    if not is_quasi_tree(m, s):
        raise DomainError("not a quasi-tree")
    n = m.sigma.num_cycles() if len(m.sigma) else 1
    diff = len(s) - (n - 1)
    assert diff >= 0 and diff % 2 == 0, "quasi-tree parity violated"
    return diff // 2


def _connected_without(m: Map, e: int) -> bool:
    vof = m.vertex_of()
    parent = {v: v for v in set(vof.values())}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for f in m.edges():
        if f == e:
            continue
        a, b = find(vof[f]), find(vof[m.alpha(f)])
        if a != b:
            parent[a] = b
    return len({find(v) for v in parent}) == 1


def is_bridge(m: Map, e: int) -> bool:
    m.edge_flags(e)
    return not _connected_without(m, e)


def is_separating_loop(m: Map, e: int) -> bool:
    return is_bridge(dual(m), e)


def _remove(m: Map, e: int) -> frozenset[int]:
    a, b = m.edge_flags(e)
    return m.sigma.domain - {a, b}


def delete(m: Map, e: int) -> Map:
    if is_bridge(m, e):
        raise DomainError(f"edge {e} is a bridge and cannot be deleted")
    keep = _remove(m, e)
    return Map(restrict(m.sigma, keep), restrict(m.alpha, keep))


def contract(m: Map, e: int) -> Map:
    if is_separating_loop(m, e):
        raise DomainError(f"edge {e} is a separating loop and cannot be contracted")
    keep = _remove(m, e)
    alpha = restrict(m.alpha, keep)
    return Map(restrict(m.phi, keep) * alpha, alpha)


def iter_subsets(m: Map) -> Iterator[frozenset[int]]:
    edges = m.edges()
    for k in range(len(edges) + 1):
        for c in combinations(edges, k):
            yield frozenset(c)


def list_quasi_trees(m: Map) -> list[frozenset[int]]:
    """All quasi-trees by direct enumeration, sorted by (size, sorted ids)."""
    if m.num_edges() > MAX_LIST_EDGES:
        raise DomainError(f"refusing to enumerate 2^{m.num_edges()} subsets")
    return [s for s in iter_subsets(m) if is_quasi_tree(m, s)]


def count_quasi_trees(m: Map) -> int:
    """Number of quasi-trees, by deletion/contraction with memoization."""
    if len(m.sigma) == 0:
        return 1
    # the cache key is the code of the map rooted at its smallest flag
    return _count_from_code(canonical_code(RootedMap(m, m.flags[0])))


@lru_cache(maxsize=1 << 16)
def _count_from_code(code: bytes) -> int:
    m = map_from_code(code).map
    forced = None
    for e in m.edges():
        bridge = is_bridge(m, e)
        loop = not bridge and is_separating_loop(m, e)
        if not bridge and not loop:
            return count_quasi_trees(contract(m, e)) + count_quasi_trees(delete(m, e))
        if forced is None:
            forced = (e, bridge)
    e, bridge = forced
    return count_quasi_trees(contract(m, e) if bridge else delete(m, e))


def complement(m: Map, s: Iterable[int]) -> frozenset[int]:
    return frozenset(m.edges()) - edge_set(m, s)


def is_spanning_tree(m: Map, s: Iterable[int]) -> bool:
    """Graph-theoretic test on G(M): connected, acyclic, spanning."""
    s = edge_set(m, s)
    if not len(m.sigma):
        return not s
    vof = m.vertex_of()
    verts = set(vof.values())
    if len(s) != len(verts) - 1:
        return False
    parent = {v: v for v in verts}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in s:
        a, b = find(vof[e]), find(vof[m.alpha(e)])
        if a == b:
            return False
        parent[a] = b
    return True

