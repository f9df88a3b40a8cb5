"""Random maps and exhaustive censuses of small rooted maps."""

from __future__ import annotations

import random
from functools import lru_cache

from .chords import bicolored_matchings, reconstruct
from .maps import Map, RootedMap, canonical_code, genus, is_connected, map_from_code
from .perm import DomainError, Permutation


def _pairs_alpha(m: int) -> Permutation:
    img = {}
    for e in range(m):
        img[2 * e], img[2 * e + 1] = 2 * e + 1, 2 * e
    return Permutation(img)


def random_map(m: int, rng: random.Random, tries: int = 10_000) -> Map:
    """Connected map with ``m`` edges: uniform rotation, rejected until connected."""
    if m < 1:
        raise DomainError("need at least one edge")
    alpha = _pairs_alpha(m)
    flags = list(range(2 * m))
    for _ in range(tries):
        img = flags[:]
        rng.shuffle(img)
        g = Map(Permutation(dict(zip(flags, img))), alpha)
        if is_connected(g):
            return g
    raise DomainError("no connected map found; raise tries")


def random_rooted_map(m: int, rng: random.Random) -> RootedMap:
    g = random_map(m, rng)
    return RootedMap(g, rng.randrange(2 * m))


def random_planar_map(m: int, rng: random.Random) -> Map:
    """Grow a plane map edge by edge: a pendant edge at a random corner, or a
    new edge between two corners of one face (rejection on the genus)."""
    if m < 1:
        raise DomainError("need at least one edge")
    sigma = {0: 0, 1: 1}
    alpha = {0: 1, 1: 0}
    while len(alpha) < 2 * m:
        x, y = len(alpha), len(alpha) + 1
        alpha[x], alpha[y] = y, x
        c = rng.choice(sorted(sigma))
        if rng.random() < 0.5:
            sigma[x], sigma[c] = sigma[c], x
            sigma[y] = y
            continue
        while True:
            d = rng.choice(sorted(sigma))
            trial = dict(sigma)
            trial[x], trial[c] = trial[c], x
            trial[y], trial[d] = trial[d], y
            g = Map(Permutation(trial), Permutation(alpha))
            if genus(g) == 0:
                sigma = trial
                break
    g = Map(Permutation(sigma), Permutation(alpha))
    assert genus(g) == 0
    return g


@lru_cache(maxsize=8)
def _census_codes(m: int) -> tuple[bytes, ...]:
    seen: dict[bytes, None] = {}
    for d in bicolored_matchings(m):
        r, _ = reconstruct(d)
        seen.setdefault(canonical_code(r), None)
    return tuple(seen)


def rooted_map_census(m: int) -> list[RootedMap]:
    """One representative of every rooted map with ``m`` edges (any genus)."""
    if not 1 <= m <= 5:
        raise DomainError("census is limited to 1..5 edges")
    return [map_from_code(c) for c in _census_codes(m)]
