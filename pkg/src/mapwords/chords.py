"""Bicolored chord diagrams, occurrence words and interlacement graphs.

A rooted bicolored diagram is stored linearly: ``word`` lists the flags in
tour order starting from the root, ``chords`` are the alpha-pairs and ``tree``
holds the ids of the chords colored 1 (the quasi-tree).  Reading the word
through ``b -> edge(b)`` gives a double occurrence word.
"""

from __future__ import annotations

import string
from collections import deque
from dataclasses import dataclass
from itertools import combinations, product
from typing import Hashable, Iterable, Iterator, Sequence

import networkx as nx

from .maps import Map, RootedMap
from .perm import DomainError, Permutation
from .quasitree import edge_set, is_spanning_tree, tour


@dataclass(frozen=True)
class BicoloredDiagram:
    word: tuple[int, ...]
    chords: tuple[tuple[int, int], ...]
    tree: frozenset[int]

    def __post_init__(self):
        flags = [b for c in self.chords for b in c]
        if sorted(flags) != sorted(self.word) or len(set(flags)) != len(flags):
            raise DomainError("every flag of the word must lie in exactly one chord")
        if not self.tree <= {c[0] for c in self.chords}:
            raise DomainError("tree must be a set of chord ids")

    @classmethod
    def build(cls, word: Sequence[int], chords: Iterable[Iterable[int]],
              tree: Iterable[int]) -> "BicoloredDiagram":
        ch = tuple(sorted(tuple(sorted(c)) for c in chords))
        return cls(tuple(word), ch, frozenset(tree))

    @property
    def partner(self) -> dict[int, int]:
        out = {}
        for a, b in self.chords:
            out[a], out[b] = b, a
        return out

    def edge_of(self) -> dict[int, int]:
        return {b: c[0] for c in self.chords for b in c}

    def color(self, e: int) -> int:
        return 1 if e in self.tree else 2

    def size(self) -> int:
        return len(self.chords)


# -- words ---------------------------------------------------------------------

def occurrences(w: Sequence[Hashable]) -> dict:
    pos: dict = {}
    for i, s in enumerate(w):
        pos.setdefault(s, []).append(i)
    if any(len(p) > 2 for p in pos.values()):
        raise DomainError("a symbol occurs more than twice")
    return pos


def is_double_occurrence(w: Sequence[Hashable]) -> bool:
    pos = occurrences(w)
    return all(len(p) == 2 for p in pos.values())


def letters(w: Sequence[Hashable]) -> tuple[str, ...]:
    """Rename symbols to a, b, c, ... in order of first occurrence."""
    names: dict = {}
    out = []
    for s in w:
        if s not in names:
            names[s] = _letter(len(names))
        out.append(names[s])
    return tuple(out)


def _letter(i: int) -> str:
    if i < 26:
        return string.ascii_lowercase[i]
    return f"{string.ascii_lowercase[i % 26]}{i // 26}"


def parse_word(text: str | Sequence[str]) -> tuple[str, ...]:
    if isinstance(text, str):
        toks = text.split()
        if len(toks) == 1 and len(toks[0]) > 1 and toks[0].isalpha():
            toks = list(toks[0])
        return tuple(toks)
    return tuple(text)


def format_word(w: Sequence[Hashable]) -> str:
    return " ".join(map(str, w))


def interlaced_pairs(w: Sequence[Hashable]) -> list[tuple]:
    """Arcs ``(e, f)`` such that ``e f e f`` is a subword (matched symbols only)."""
    pos = occurrences(w)
    spans = sorted((p[0], p[1], s) for s, p in pos.items() if len(p) == 2)
    out = []
    for i, (e1, e2, e) in enumerate(spans):
        for f1, f2, f in spans[i + 1:]:
            if f1 > e2:
                break
            if f2 > e2:
                out.append((e, f))
    return out


def directed_interlacement(w: Sequence[Hashable]) -> nx.DiGraph:
    g = nx.DiGraph()
    pos = occurrences(w)
    g.add_nodes_from(s for s in dict.fromkeys(w) if len(pos[s]) == 2)
    g.add_edges_from(interlaced_pairs(w))
    return g


def double_occurrence_word(d: BicoloredDiagram) -> tuple[int, ...]:
    eo = d.edge_of()
    return tuple(eo[b] for b in d.word)


# -- diagrams and maps ---------------------------------------------------------------

def diagram_of(r: RootedMap, s: Iterable[int]) -> BicoloredDiagram:
    m = r.map
    s = edge_set(m, s)
    t = tour(m, s)
    word = [r.root]
    b = t(r.root)
    while b != r.root:
        word.append(b)
        b = t(b)
    if len(word) != len(m.sigma):
        raise DomainError("the subset is not a quasi-tree (tour is not one cycle)")
    return BicoloredDiagram.build(word, [(e, m.alpha(e)) for e in m.edges()], s)


def reconstruct(d: BicoloredDiagram) -> tuple[RootedMap, frozenset[int]]:
    w = d.word
    if not w:
        raise DomainError("the empty diagram has no root")
    n = len(w)
    tau = {w[i]: w[(i + 1) % n] for i in range(n)}
    alpha = d.partner
    eo = d.edge_of()
    # tour = sigma * alpha_S, and alpha_S is an involution
    sigma = {b: tau[alpha[b]] if eo[b] in d.tree else tau[b] for b in w}
    return RootedMap(Map(Permutation(sigma), Permutation(alpha)), w[0]), d.tree


def ordered_matchings(m: int) -> Iterator[tuple[tuple[int, int], ...]]:
    """All perfect matchings of 0..2m-1, as sorted pair tuples."""
    def rec(free):
        if not free:
            yield ()
            return
        a = free[0]
        for i in range(1, len(free)):
            rest = free[1:i] + free[i + 1:]
            for tail in rec(rest):
                yield ((a, free[i]),) + tail
    yield from rec(tuple(range(2 * m)))


def bicolored_matchings(m: int) -> Iterator[BicoloredDiagram]:
    """All rooted bicolored diagrams with ``m`` chords on flags 0..2m-1."""
    word = tuple(range(2 * m))
    for match in ordered_matchings(m):
        ids = [c[0] for c in match]
        for colors in product((False, True), repeat=m):
            tree = frozenset(e for e, c in zip(ids, colors) if c)
            yield BicoloredDiagram(word, match, tree)


# -- undirected interlacement, local complementation, pivoting -------------------

def interlacement(d: BicoloredDiagram) -> nx.Graph:
    """The circle graph of the diagram, on chord ids."""
    g = nx.Graph()
    g.add_nodes_from(c[0] for c in d.chords)
    g.add_edges_from(interlaced_pairs(double_occurrence_word(d)))
    return g


def bipartite_interlacement(d: BicoloredDiagram) -> nx.Graph:
    """Edges of the circle graph joining a color-1 chord to a color-2 chord."""
    g = interlacement(d)
    h = nx.Graph()
    h.add_nodes_from(g)
    h.add_edges_from((u, v) for u, v in g.edges if (u in d.tree) != (v in d.tree))
    return h


def local_complement(g: nx.Graph, v) -> nx.Graph:
    if v not in g:
        raise DomainError(f"unknown vertex {v!r}")
    h = g.copy()
    for a, b in combinations(sorted(g[v], key=repr), 2):
        if h.has_edge(a, b):
            h.remove_edge(a, b)
        else:
            h.add_edge(a, b)
    return h


def pivot_graph(g: nx.Graph, u, v) -> nx.Graph:
    if not g.has_edge(u, v):
        raise DomainError(f"{u!r}{v!r} is not an edge")
    h1 = local_complement(local_complement(local_complement(g, u), v), u)
    h2 = local_complement(local_complement(local_complement(g, v), u), v)
    assert nx.utils.graphs_equal(h1, h2), "pivot orders disagree"
    return h1


def pivot_diagram(d: BicoloredDiagram, e: int, f: int) -> BicoloredDiagram:
    """Diagram of ``S ^ {e, f}``: swap the two arcs cut out by the chords."""
    part = d.partner
    ids = {c[0] for c in d.chords}
    if e not in ids or f not in ids or e == f:
        raise DomainError("pivot needs two distinct chord ids")
    w = d.word
    n = len(w)
    idx = {b: i for i, b in enumerate(w)}
    start = idx[e]
    cyc = w[start:] + w[:start]             # e1 W2 f? W3 e2 W4 f? W1
    p = {b: i for i, b in enumerate(cyc)}
    e2 = p[part[e]]
    fs = sorted((p[f], p[part[f]]))
    if not (fs[0] < e2 < fs[1]):
        raise DomainError(f"chords {e} and {f} do not interlace")
    f1, f2 = fs
    w2, w3, w4, w1 = cyc[1:f1], cyc[f1 + 1:e2], cyc[e2 + 1:f2], cyc[f2 + 1:]
    new = (cyc[0],) + w4 + (cyc[f2],) + w3 + (cyc[e2],) + w2 + (cyc[f1],) + w1
    r = new.index(w[0])
    assert len(new) == n
    return BicoloredDiagram(new[r:] + new[:r], d.chords, d.tree ^ {e, f})


def pivot_class(d: BicoloredDiagram, limit: int = 1 << 20) -> list[BicoloredDiagram]:
    """All diagrams reachable by pivots, sorted by tree."""
    seen = {d.tree: d}
    queue = deque([d])
    while queue:
        cur = queue.popleft()
        for e, f in interlacement(cur).edges:
            nxt = pivot_diagram(cur, e, f)
            if nxt.tree not in seen:
                if len(seen) >= limit:
                    raise DomainError("pivot class exceeds the size guard")
                seen[nxt.tree] = nxt
                queue.append(nxt)
    return [seen[t] for t in sorted(seen, key=lambda t: (len(t), sorted(t)))]


def diagram_minor(d: BicoloredDiagram, e: int) -> BicoloredDiagram:
    """Remove chord ``e`` (contraction if colored 1, deletion if colored 2)."""
    part = d.partner
    if e not in part or part[e] < e:
        raise DomainError(f"{e} is not a chord id")
    gone = {e, part[e]}
    return BicoloredDiagram(tuple(b for b in d.word if b not in gone),
                            tuple(c for c in d.chords if c[0] != e),
                            d.tree - {e})


# -- spanning-tree side: fundamental cycles and cocycles --------------------------

def fundamental_interlacement(m: Map, tree: Iterable[int]) -> nx.Graph:
    """Bipartite graph joining ``e`` in the tree to ``f`` outside it when ``e``
    lies on the fundamental cycle of ``f``; computed on G(M) alone."""
    tree = edge_set(m, tree)
    if not is_spanning_tree(m, tree):
        raise DomainError("not a spanning tree")
    vof = m.vertex_of()
    t = nx.Graph()
    t.add_nodes_from(set(vof.values()))
    for e in tree:
        t.add_edge(vof[e], vof[m.alpha(e)], id=e)
    g = nx.Graph()
    g.add_nodes_from(m.edges())
    for f in m.edges():
        if f in tree:
            continue
        path = nx.shortest_path(t, vof[f], vof[m.alpha(f)])
        for a, b in zip(path, path[1:]):
            g.add_edge(t[a][b]["id"], f)
    return g


def fundamental_cocycle(m: Map, tree: Iterable[int], e: int) -> frozenset[int]:
    """Edges crossing the cut obtained by removing ``e`` from the tree."""
    tree = edge_set(m, tree)
    vof = m.vertex_of()
    t = nx.Graph()
    t.add_nodes_from(set(vof.values()))
    t.add_edges_from((vof[x], vof[m.alpha(x)]) for x in tree if x != e)
    side = nx.node_connected_component(t, vof[e])
    return frozenset(x for x in m.edges()
                     if (vof[x] in side) != (vof[m.alpha(x)] in side))


def sandwich(r: RootedMap, s: Iterable[int]) -> tuple[frozenset[int], frozenset[int]]:
    """Quasi-trees ``S0 <= S <= S1`` with ``S0`` a spanning tree and the
    complement of ``S1`` a spanning tree of the dual, built by pivoting away
    interlaced same-colored pairs."""
    d = diagram_of(r, s)
    lo = d
    while True:
        pair = next(((a, b) for a, b in interlacement(lo).edges
                     if a in lo.tree and b in lo.tree), None)
        if pair is None:
            break
        lo = pivot_diagram(lo, *pair)
    hi = d
    while True:
        pair = next(((a, b) for a, b in interlacement(hi).edges
                     if a not in hi.tree and b not in hi.tree), None)
        if pair is None:
            break
        hi = pivot_diagram(hi, *pair)
    return lo.tree, hi.tree


def all_double_occurrence_words(n: int) -> Iterator[tuple[str, ...]]:
    """Canonical double occurrence words on ``n`` symbols (letters in order)."""
    for match in ordered_matchings(n):
        w = [None] * (2 * n)
        for i, (a, b) in enumerate(match):
            w[a] = w[b] = _letter(i)
        yield tuple(w)

