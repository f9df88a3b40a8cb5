"""General maps ``(B, sigma, alpha)``, rooted maps, and their file format.

Vertices are the cycles of ``sigma``, edges the cycles of ``alpha`` and faces
the cycles of ``sigma * alpha``.  An edge is named by the smaller of its two
flags; a vertex or face by its smallest flag.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import NamedTuple

from .perm import DomainError, Permutation, compose


@dataclass(frozen=True)
class Map:
    """A general map.  ``alpha`` is not checked here; use :func:`validate`."""

    sigma: Permutation
    alpha: Permutation

    def __post_init__(self):
        if self.sigma.domain != self.alpha.domain:
            raise DomainError("sigma and alpha act on different flag sets")

    @classmethod
    def from_cycles(cls, sigma, alpha, nflags: int | None = None) -> "Map":
        dom = None if nflags is None else range(nflags)
        return cls(Permutation.from_cycles(sigma, dom),
                   Permutation.from_cycles(alpha, dom))

    @property
    def flags(self) -> tuple[int, ...]:
        return tuple(sorted(self.sigma.domain))

    @property
    def phi(self) -> Permutation:
        """Face permutation ``sigma * alpha``."""
        return compose(self.sigma, self.alpha)

    def edges(self) -> list[int]:
        return sorted(b for b in self.flags if b < self.alpha(b))

    def edge_of(self, b: int) -> int:
        return min(b, self.alpha(b))

    def edge_flags(self, e: int) -> tuple[int, int]:
        if e not in self.sigma or self.alpha(e) < e:
            raise DomainError(f"{e} is not an edge id")
        return (e, self.alpha(e))

    def vertices(self) -> list[tuple[int, ...]]:
        return self.sigma.cycles()

    def faces(self) -> list[tuple[int, ...]]:
        return self.phi.cycles()

    def vertex_of(self) -> dict[int, int]:
        """Map each flag to the id (smallest flag) of its vertex."""
        out = {}
        for cyc in self.sigma.cycles():
            for b in cyc:
                out[b] = cyc[0]
        return out

    def num_edges(self) -> int:
        return len(self.sigma) // 2

    def relabel(self, f) -> "Map":
        return Map(self.sigma.relabel(f), self.alpha.relabel(f))

    def compact(self) -> tuple["Map", dict[int, int]]:
        """Relabel flags to 0..n-1 preserving order; return the relabeling too."""
        f = {b: i for i, b in enumerate(self.flags)}
        return self.relabel(f), f


@dataclass(frozen=True)
class RootedMap:
    map: Map
    root: int

    def __post_init__(self):
        if self.root not in self.map.sigma:
            raise DomainError(f"root {self.root} is not a flag")

    @property
    def sigma(self) -> Permutation:
        return self.map.sigma

    @property
    def alpha(self) -> Permutation:
        return self.map.alpha


class Euler(NamedTuple):
    vertices: int
    edges: int
    faces: int
    genus: int


@dataclass(frozen=True)
class UnderlyingGraph:
    vertices: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, int], ...]
    ends: dict = field(hash=False, compare=False)
    loops: frozenset = frozenset()

    def incident(self, e: int, v: int) -> bool:
        return v in self.ends[e]

    def to_networkx(self):
        import networkx as nx

        g = nx.MultiGraph()
        g.add_nodes_from(v[0] for v in self.vertices)
        for e, _ in self.edges:
            u, v = self.ends[e]
            g.add_edge(u, v, key=e)
        return g


# -- named small maps used throughout the docs and tests ----------------------

def loop_map() -> Map:
    """One vertex carrying one loop."""
    return Map.from_cycles([(0, 1)], [(0, 1)])


def link_map() -> Map:
    """One edge joining two vertices."""
    return Map.from_cycles([], [(0, 1)], 2)


def digon_map() -> Map:
    """Two vertices joined by two parallel edges (planar)."""
    return Map.from_cycles([(0, 2), (1, 3)], [(0, 1), (2, 3)])


def torus_map() -> Map:
    """One vertex with two interlaced loops: the torus with one face."""
    return Map.from_cycles([(0, 1, 2, 3)], [(0, 2), (1, 3)])


def theta_map() -> Map:
    """Two vertices joined by three parallel edges, embedded in the plane."""
    return Map.from_cycles([(0, 2, 4), (1, 5, 3)], [(0, 1), (2, 3), (4, 5)])


def empty_map() -> Map:
    """The map with no flags, standing for a single isolated vertex."""
    return Map(Permutation({}), Permutation({}))


# -- operations ----------------------------------------------------------------

def validate(g: Map) -> str:
    """Return ``"ok"`` or a description of the first violated map axiom."""
    n = len(g.sigma)
    if n % 2:
        return f"odd flag count {n}"
    for b in g.flags:
        a = g.alpha(b)
        if a == b:
            return f"alpha has fixed point {b}"
        if g.alpha(a) != b:
            return f"alpha is not an involution at {b}"
    return "ok"


def components(g: Map) -> list[frozenset[int]]:
    """Orbits of the group generated by sigma and alpha, sorted by min flag."""
    seen: set[int] = set()
    out = []
    for b in g.flags:
        if b in seen:
            continue
        block = {b}
        stack = [b]
        while stack:
            c = stack.pop()
            for d in (g.sigma(c), g.alpha(c)):
                if d not in block:
                    block.add(d)
                    stack.append(d)
        seen |= block
        out.append(frozenset(block))
    return out


def is_connected(g: Map) -> bool:
    return len(components(g)) <= 1


def dual(g: Map) -> Map:
    return Map(g.phi, g.alpha)


def dual_rooted(r: RootedMap) -> RootedMap:
    return RootedMap(dual(r.map), r.root)


def reverse(g: Map) -> Map:
    """Same map with the orientation reversed: ``(B, sigma^-1, alpha)``."""
    return Map(g.sigma.inverse(), g.alpha)


def euler(g: Map) -> Euler:
    if not is_connected(g):
        raise DomainError("genus is defined for connected maps only")
    e = g.num_edges()
    if e == 0:
        # the flagless map is the one-vertex plane map
        return Euler(1, 0, 1, 0)
    v = g.sigma.num_cycles()
    f = g.phi.num_cycles()
    chi = v - e + f
    return Euler(v, e, f, (2 - chi) // 2)


def genus(g: Map) -> int:
    return euler(g).genus


def underlying_graph(g: Map) -> UnderlyingGraph:
    vof = g.vertex_of()
    ends = {}
    loops = set()
    edges = []
    for e in g.edges():
        a = g.alpha(e)
        ends[e] = (vof[e], vof[a])
        if vof[e] == vof[a]:
            loops.add(e)
        edges.append((e, a))
    return UnderlyingGraph(tuple(g.vertices()), tuple(edges), ends, frozenset(loops))


def canonical_labels(r: RootedMap) -> dict[int, int]:
    """Renumber flags in order of first discovery by a breadth-first walk from
    the root that tries ``sigma`` before ``alpha``."""
    g = r.map
    label = {r.root: 0}
    order = [r.root]
    i = 0
    while i < len(order):
        b = order[i]
        for c in (g.sigma(b), g.alpha(b)):
            if c not in label:
                label[c] = len(order)
                order.append(c)
        i += 1
    if len(order) != len(g.sigma):
        raise DomainError("canonical code needs a connected rooted map")
    return label


def canonical_code(r: RootedMap) -> bytes:
    """A byte string equal for two rooted maps iff they are isomorphic."""
    g = r.map
    label = canonical_labels(r)
    order = sorted(label, key=label.get)
    parts = [f"{label[g.sigma(b)]}.{label[g.alpha(b)]}" for b in order]
    return ",".join(parts).encode()


def map_from_code(code: bytes) -> RootedMap:
    """Inverse of :func:`canonical_code` (the root becomes flag 0)."""
    if not code:
        raise DomainError("the empty code has no root flag")
    sig, alp = {}, {}
    for i, part in enumerate(code.decode().split(",")):
        s, a = part.split(".")
        sig[i] = int(s)
        alp[i] = int(a)
    return RootedMap(Map(Permutation(sig), Permutation(alp)), 0)


# -- file format ----------------------------------------------------------------

def to_record(g: Map, root: int | None = None) -> dict:
    """Structured record with flags compacted to 0..n-1."""
    c, f = g.compact()
    rec = {
        "flags": len(c.sigma),
        "sigma": [list(cyc) for cyc in c.sigma.cycles()],
        "alpha": [list(cyc) for cyc in c.alpha.cycles()],
    }
    if root is not None:
        rec["root"] = f[root]
    return rec


def dumps(g: Map | RootedMap) -> str:
    if isinstance(g, RootedMap):
        return json.dumps(to_record(g.map, g.root))
    return json.dumps(to_record(g))


def from_record(rec: dict) -> Map | RootedMap:
    """Parse a map record; returns a RootedMap when ``root`` is present.

    Raises ``ValueError`` on structural problems (bad keys, repeated flags);
    axiom violations such as a fixed point of alpha are left to
    :func:`validate`.
    """
    if not isinstance(rec, dict) or not {"flags", "sigma", "alpha"} <= rec.keys():
        raise ValueError("map record needs keys flags, sigma, alpha")
    n = rec["flags"]
    if not isinstance(n, int) or n < 0:
        raise ValueError("flags must be a nonnegative integer")
    for key in ("sigma", "alpha"):
        for cyc in rec[key]:
            if any(not isinstance(b, int) or not 0 <= b < n for b in cyc):
                raise ValueError(f"{key} mentions a flag outside 0..{n - 1}")
    try:
        g = Map.from_cycles(rec["sigma"], rec["alpha"], n)
    except DomainError as exc:
        raise ValueError(str(exc)) from None
    if "root" in rec:
        root = rec["root"]
        if not isinstance(root, int) or not 0 <= root < n:
            raise ValueError("root must be a flag")
        return RootedMap(g, root)
    return g


def loads(text: str) -> Map | RootedMap:
    return from_record(json.loads(text))

