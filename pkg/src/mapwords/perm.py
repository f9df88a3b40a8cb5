"""Permutations of finite sets of integer flags.

Permutations compose right-to-left: ``p * q`` (or ``compose(p, q)``) maps
``b`` to ``p(q(b))``.  Cycle listings are canonical: every cycle starts at its
smallest flag and cycles are sorted by that flag.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping


class DomainError(ValueError):
    """An operation was applied outside the domain where it is defined."""


class Permutation:
    """An immutable bijection of a finite set of integers onto itself."""

    __slots__ = ("_img", "_hash")

    def __init__(self, images: Mapping[int, int] | Iterable[int]):
        if isinstance(images, Mapping):
            img = dict(images)
        else:
            img = dict(enumerate(images))
        if set(img.values()) != set(img):
            raise DomainError("images do not form a bijection of the domain")
        self._img = img
        self._hash = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def identity(cls, domain: Iterable[int]) -> "Permutation":
        return cls({b: b for b in domain})

    @classmethod
    def from_cycles(cls, cycles: Iterable[Iterable[int]],
                    domain: Iterable[int] | None = None) -> "Permutation":
        """Build from cycle notation; flags of ``domain`` not listed are fixed."""
        img: dict[int, int] = {} if domain is None else {b: b for b in domain}
        seen: set[int] = set()
        for cyc in cycles:
            cyc = list(cyc)
            for b in cyc:
                if b in seen:
                    raise DomainError(f"flag {b} appears twice in cycle notation")
                seen.add(b)
            for i, b in enumerate(cyc):
                img[b] = cyc[(i + 1) % len(cyc)]
        return cls(img)

    # -- basic protocol ---------------------------------------------------

    def __call__(self, b: int) -> int:
        return self._img[b]

    def __len__(self) -> int:
        return len(self._img)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self._img))

    def __contains__(self, b: object) -> bool:
        return b in self._img

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._img == other._img

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._img.items()))
        return self._hash

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __repr__(self) -> str:
        return f"Permutation({self})"

    def __str__(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycs)

    @property
    def domain(self) -> frozenset[int]:
        return frozenset(self._img)

    def items(self):
        return self._img.items()

    def inverse(self) -> "Permutation":
        return Permutation({v: k for k, v in self._img.items()})

    def cycles(self) -> list[tuple[int, ...]]:
        return cycles(self)

    def num_cycles(self) -> int:
        seen: set[int] = set()
        count = 0
        for b in self._img:
            if b in seen:
                continue
            count += 1
            while b not in seen:
                seen.add(b)
                b = self._img[b]
        return count

    def is_involution(self) -> bool:
        img = self._img
        return all(img[img[b]] == b for b in img)

    def fixed_points(self) -> list[int]:
        return sorted(b for b, c in self._img.items() if b == c)

    def relabel(self, f: Mapping[int, int]) -> "Permutation":
        """Conjugate by the relabeling ``f``: the result maps f(b) to f(p(b))."""
        return Permutation({f[b]: f[c] for b, c in self._img.items()})


def compose(outer: Permutation, inner: Permutation) -> Permutation:
    """Return ``outer ∘ inner``."""
    if outer._img.keys() != inner._img.keys():
        raise DomainError("cannot compose permutations of different flag sets")
    o = outer._img
    return Permutation({b: o[c] for b, c in inner._img.items()})


def cycles(p: Permutation) -> list[tuple[int, ...]]:
    img = p._img
    seen: set[int] = set()
    out = []
    for b in sorted(img):
        if b in seen:
            continue
        cyc = []
        while b not in seen:
            seen.add(b)
            cyc.append(b)
            b = img[b]
        out.append(tuple(cyc))
    return out


def restrict(p: Permutation, sub: Iterable[int]) -> Permutation:
    """First-return map of ``p`` on ``sub``."""
    sub = frozenset(sub)
    img = p._img
    if not sub <= img.keys():
        raise DomainError("restriction set is not contained in the domain")
    out = {}
    for b in sub:
        c = img[b]
        while c not in sub:
            c = img[c]
        out[b] = c
    return Permutation(out)


def cut_out(p: Permutation, sub: Iterable[int]) -> Permutation:
    """``restrict(p, sub)`` on ``sub``, identity elsewhere."""
    r = restrict(p, sub)
    img = {b: b for b in p._img}
    img.update(r._img)
    return Permutation(img)


def format_cycles(p: Permutation) -> str:
    return str(p)


def parse_cycles(text: str, domain: Iterable[int] | None = None) -> Permutation:
    """Parse cycle notation such as ``(0 2)(1 3)``."""
    text = text.strip()
    if text in ("", "()"):
        return Permutation.identity(domain or ())
    cycs = []
    for chunk in text.replace(")", ")\n").split("\n"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if not (chunk.startswith("(") and chunk.endswith(")")):
            raise ValueError(f"malformed cycle {chunk!r}")
        body = chunk[1:-1].replace(",", " ").split()
        cycs.append([int(t) for t in body])
    return Permutation.from_cycles(cycs, domain)
