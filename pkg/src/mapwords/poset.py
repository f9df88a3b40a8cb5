"""The quasi-tree poset of a rooted map.

Each quasi-tree ``S`` gets a binary key: read the tour word of ``S`` from the
root, keep the first occurrence of every edge and write 1 for edges of ``S``,
0 otherwise.  ``S`` is covered by ``S'`` when the two differ in exactly two
edges and ``key(S) < key(S')`` lexicographically.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

import networkx as nx

from .chords import diagram_of, double_occurrence_word
from .maps import RootedMap, dual_rooted
from .perm import DomainError
from .quasitree import complement, list_quasi_trees


def binary_key(w: Sequence[Hashable], marked: Iterable[Hashable]) -> tuple[int, ...]:
    marked = set(marked)
    seen = set()
    bits = []
    for s in w:
        if s not in seen:
            seen.add(s)
            bits.append(1 if s in marked else 0)
    return tuple(bits)


def quasi_tree_key(r: RootedMap, s: Iterable[int]) -> tuple[int, ...]:
    s = frozenset(s)
    return binary_key(double_occurrence_word(diagram_of(r, s)), s)


@dataclass(frozen=True)
class QtPoset:
    elements: tuple[frozenset[int], ...]
    keys: tuple[tuple[int, ...], ...]
    covers: tuple[tuple[int, int], ...]     # index pairs (lower, upper)
    ties: tuple[tuple[int, int], ...]       # single pivots with equal keys

    def graph(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(range(len(self.elements)))
        g.add_edges_from(self.covers)
        return g

    def minimal(self) -> list[frozenset[int]]:
        g = self.graph()
        return [self.elements[i] for i in g if g.in_degree(i) == 0]

    def maximal(self) -> list[frozenset[int]]:
        g = self.graph()
        return [self.elements[i] for i in g if g.out_degree(i) == 0]

    def leq(self, a: frozenset[int], b: frozenset[int]) -> bool:
        i, j = self.elements.index(a), self.elements.index(b)
        return i == j or nx.has_path(self.graph(), i, j)

    def to_record(self) -> dict:
        return {
            "elements": [sorted(s) for s in self.elements],
            "covers": [[sorted(self.elements[i]), sorted(self.elements[j])]
                       for i, j in self.covers],
        }


def build_poset(r: RootedMap, limit: int = 4096) -> QtPoset:
    qts = list_quasi_trees(r.map)
    if len(qts) > limit:
        raise DomainError(f"{len(qts)} quasi-trees exceed the poset size guard")
    keys = [quasi_tree_key(r, s) for s in qts]
    covers, ties = [], []
    for i, a in enumerate(qts):
        for j in range(i + 1, len(qts)):
            if len(a ^ qts[j]) != 2:
                continue
            if keys[i] < keys[j]:
                covers.append((i, j))
            elif keys[j] < keys[i]:
                covers.append((j, i))
            else:
                ties.append((i, j))
    p = QtPoset(tuple(qts), tuple(keys), tuple(sorted(covers)), tuple(ties))
    # keys increase strictly along covers, so a cycle would be a bug
    assert nx.is_directed_acyclic_graph(p.graph()), "quasi-tree order is not antisymmetric"
    return p


def poset_minimum(r: RootedMap) -> frozenset[int]:
    mins = build_poset(r).minimal()
    if len(mins) != 1:
        raise DomainError(f"the poset has {len(mins)} minimal elements")
    return mins[0]


def poset_maximum(r: RootedMap) -> frozenset[int]:
    maxs = build_poset(r).maximal()
    if len(maxs) != 1:
        raise DomainError(f"the poset has {len(maxs)} maximal elements")
    return maxs[0]


def expected_maximum(r: RootedMap) -> frozenset[int]:
    """Complement of the Late DFS-tree of the dual rooted at the same flag."""
    from .dfs import late_tree

    return complement(r.map, late_tree(dual_rooted(r)))
