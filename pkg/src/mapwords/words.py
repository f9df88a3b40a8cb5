"""Words with one or two occurrences per symbol, the properties P, Q, N, N'
and the counting sequences they define.

Conventions.  In a word ``w`` the arc ``e -> f`` of the directed
interlacement means that ``e f e f`` is a subword; ``e`` is then interlaced on
the right (by ``f``) and ``f`` on the left (by ``e``).  A sink is a matched
symbol with no out-arc.  An unmatched symbol ``a`` is covered by a matched
``b`` when ``b a b`` is a subword.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb, factorial
from typing import Hashable, Iterator, Sequence

from .chords import (
    BicoloredDiagram,
    diagram_of,
    double_occurrence_word,
    interlaced_pairs,
    letters,
    occurrences,
    reconstruct,
)
from .maps import RootedMap
from .perm import DomainError

Word = tuple[Hashable, ...]

MAX_GEN_LENGTH = 16
MAX_F_DEGREE = 8


# -- generation ----------------------------------------------------------------

def word_count(n: int, m: int) -> int:
    """Number of canonical words with ``n`` matched and ``m`` unmatched symbols."""
    if n < 0 or m < 0:
        return 0
    return factorial(2 * n + m) // (2 ** n * factorial(n) * factorial(m))


def gen_words(n: int, m: int = 0) -> Iterator[tuple[str, ...]]:
    """Every 1-2 occurrence word with ``n`` matched and ``m`` unmatched symbols,
    named a, b, c, ... in order of first occurrence."""
    if n < 0 or m < 0:
        raise DomainError("symbol counts must be nonnegative")
    length = 2 * n + m
    if length > MAX_GEN_LENGTH:
        raise DomainError(f"word length {length} exceeds the guard {MAX_GEN_LENGTH}")
    word: list[int] = []

    def rec(nxt: int, open_: list[int], nm: int, nu: int):
        if len(word) == length:
            yield tuple(word)
            return
        for i, s in enumerate(open_):
            word.append(s)
            yield from rec(nxt, open_[:i] + open_[i + 1:], nm, nu)
            word.pop()
        # a fresh symbol opens only if enough room is left to close the open ones
        room = length - len(word) - len(open_)
        if nm < n and room >= 2:
            word.append(nxt)
            yield from rec(nxt + 1, open_ + [nxt], nm + 1, nu)
            word.pop()
        if nu < m and room >= 1:
            word.append(nxt)
            yield from rec(nxt + 1, open_, nm, nu + 1)
            word.pop()

    for w in rec(0, [], 0, 0):
        yield letters(w)


# -- basic word structure ------------------------------------------------------

def unmatched(w: Sequence[Hashable]) -> frozenset:
    return frozenset(s for s, p in occurrences(w).items() if len(p) == 1)


def matched_part(w: Sequence[Hashable]) -> Word:
    """``w°``: the subword of matched symbols."""
    u = unmatched(w)
    return tuple(s for s in w if s not in u)


def restrict_word(w: Sequence[Hashable], keep) -> Word:
    keep = set(keep)
    return tuple(s for s in w if s in keep)


def sinks(w: Sequence[Hashable]) -> frozenset:
    pos = occurrences(w)
    right = {e for e, _ in interlaced_pairs(w)}
    return frozenset(s for s, p in pos.items() if len(p) == 2 and s not in right)


def covering_pairs(w: Sequence[Hashable]) -> list[tuple]:
    """Pairs ``(b, a)`` with ``a`` unmatched and ``b a b`` a subword."""
    pos = occurrences(w)
    out = []
    for a, pa in pos.items():
        if len(pa) != 1:
            continue
        for b, pb in pos.items():
            if len(pb) == 2 and pb[0] < pa[0] < pb[1]:
                out.append((b, a))
    return out


def _require_double(w: Sequence[Hashable]) -> None:
    if any(len(p) != 2 for p in occurrences(w).values()):
        raise DomainError("a double occurrence word is required")


# -- properties ---------------------------------------------------------------------

def has_P(w: Sequence[Hashable]) -> bool:
    """Every symbol interlaced on the right is interlaced on the right by a sink."""
    _require_double(w)
    arcs = interlaced_pairs(w)
    snk = sinks(w)
    right = {e for e, _ in arcs}
    good = {e for e, f in arcs if f in snk}
    return right <= good


def has_N(w: Sequence[Hashable]) -> bool:
    """No symbol is interlaced both on the left and on the right."""
    _require_double(w)
    arcs = interlaced_pairs(w)
    return not ({e for e, _ in arcs} & {f for _, f in arcs})


def has_Q(w: Sequence[Hashable]) -> bool:
    occurrences(w)
    if not has_P(matched_part(w)):
        return False
    snk = sinks(w)
    return not any(b in snk for b, _ in covering_pairs(w))


def has_Nprime(w: Sequence[Hashable]) -> bool:
    occurrences(w)
    if not has_N(matched_part(w)):
        return False
    snk = sinks(w)
    return all(b in snk for b, _ in covering_pairs(w))


PREDICATES = {"P": has_P, "Q": has_Q, "N": has_N, "Nprime": has_Nprime}


# -- decompositions -------------------------------------------------------------

@dataclass(frozen=True)
class QEmpty:
    def word(self) -> Word:
        return ()


@dataclass(frozen=True)
class QUnmatched:
    prefix: Word
    symbol: Hashable

    def word(self) -> Word:
        return self.prefix + (self.symbol,)


@dataclass(frozen=True)
class QSplit:
    left: Word
    symbol: Hashable
    inner: Word

    def word(self) -> Word:
        return self.left + (self.symbol,) + self.inner + (self.symbol,)


QDecomposition = QEmpty | QUnmatched | QSplit


def split_last(w: Sequence[Hashable]) -> QDecomposition:
    """Case split on the last symbol, without checking any property."""
    w = tuple(w)
    if not w:
        return QEmpty()
    a = w[-1]
    pos = occurrences(w)[a]
    if len(pos) == 1:
        return QUnmatched(w[:-1], a)
    return QSplit(w[:pos[0]], a, w[pos[0] + 1:-1])


def q_conditions(d: QDecomposition, w: Sequence[Hashable]) -> bool:
    """The right-hand side of the decomposition lemma for property Q."""
    if isinstance(d, QEmpty):
        return True
    if isinstance(d, QUnmatched):
        return has_Q(d.prefix)
    u = unmatched(w)
    return (not any(s in u for s in d.inner)
            and has_P(matched_part(d.inner))
            and has_Q(d.left))


def decompose_Q(w: Sequence[Hashable]) -> QDecomposition:
    w = tuple(w)
    if not has_Q(w):
        raise DomainError(f"{''.join(map(str, w))!r} does not have property Q")
    d = split_last(w)
    assert d.word() == w and q_conditions(d, w)
    return d


@dataclass(frozen=True)
class NSplit:
    """``w = w_k u_k ... w_1 u_1 a w_0 a``; ``blocks`` lists ``(w_i, u_i)`` for
    i = 1..k (so it is read right to left)."""

    symbol: Hashable
    inner: Word                                # w_0
    blocks: tuple[tuple[Word, Word], ...]      # ((w_1, u_1), ..., (w_k, u_k))
    z: Word = field(default=())                # pattern of w_0 on U(w_0) \ U(w)

    @property
    def k(self) -> int:
        return len(self.blocks)

    def word(self) -> Word:
        head: Word = ()
        for wi, ui in reversed(self.blocks):
            head += wi + ui
        return head + (self.symbol,) + self.inner + (self.symbol,)


NDecomposition = QEmpty | QUnmatched | NSplit


def split_nprime(w: Sequence[Hashable]) -> NDecomposition:
    """Split ``w`` into the unique shape of the N' decomposition lemma."""
    w = tuple(w)
    d = split_last(w)
    if not isinstance(d, QSplit):
        return d
    u_w0 = unmatched(d.inner)
    zset = u_w0 - unmatched(w)
    z = tuple(s for s in d.inner if s in zset)
    prefix = d.left
    # right to left: a run of z-symbols (u_i) then a run of other symbols (w_i)
    blocks = []
    i = len(prefix)
    while True:
        j = i
        while j > 0 and prefix[j - 1] in zset:
            j -= 1
        ui, i = prefix[j:i], j
        while j > 0 and prefix[j - 1] not in zset:
            j -= 1
        blocks.append((prefix[j:i], ui))
        i = j
        if i == 0:
            break
    return NSplit(d.symbol, d.inner, tuple(blocks), z)


def nprime_conditions(d: NDecomposition, w: Sequence[Hashable]) -> bool:
    """The right-hand side of the decomposition lemma for property N'."""
    if isinstance(d, QEmpty):
        return True
    if isinstance(d, QUnmatched):
        return has_Nprime(d.prefix)
    k = d.k
    ws = [wi for wi, _ in d.blocks]
    us = [ui for _, ui in d.blocks]
    if any(not us[i] for i in range(1, k)) or any(not ws[i] for i in range(k - 1)):
        return False
    if sum((us[i] for i in reversed(range(k))), ()) != tuple(reversed(d.z)):
        return False
    zset = set(d.z)
    shared = unmatched(d.inner) & unmatched(w)
    last_z = max((i for i, s in enumerate(d.inner) if s in zset), default=-1)
    first_shared = min((i for i, s in enumerate(d.inner) if s in shared),
                       default=len(d.inner))
    if last_z > first_shared:
        return False
    if not (has_Nprime(d.inner) and has_Nprime(ws[-1])):
        return False
    return all(_is_double(ws[i]) and has_N(ws[i]) for i in range(k - 1))


def _is_double(w: Sequence[Hashable]) -> bool:
    return all(len(p) == 2 for p in occurrences(w).values())


def decompose_Nprime(w: Sequence[Hashable]) -> NDecomposition:
    w = tuple(w)
    if not has_Nprime(w):
        raise DomainError(f"{''.join(map(str, w))!r} does not have property N'")
    d = split_nprime(w)
    assert d.word() == w and nprime_conditions(d, w)
    return d


# -- exact counts -------------------------------------------------------------------

@lru_cache(maxsize=None)
def count_G(n: int, m: int) -> int:
    """Words with property Q, ``n`` matched and ``m`` unmatched symbols."""
    if n < 0 or m < 0:
        return 0
    if n == 0:
        return 1
    total = count_G(n, m - 1)
    for i in range(n):
        for j in range(n - i):
            total += (factorial(2 * i + j) // factorial(2 * i) * comb(m + j, j)
                      * count_G(i, 0) * count_G(n - 1 - i - j, m + j))
    return total


@lru_cache(maxsize=None)
def count_M(n: int, m: int) -> int:
    """``m! G(n, m)``: words with property Q whose unmatched symbols are labeled."""
    if n < 0 or m < 0:
        return 0
    if n == 0:
        return factorial(m)
    total = m * count_M(n, m - 1)
    for i in range(n):
        for j in range(n - i):
            total += comb(2 * i + j, j) * count_M(i, 0) * count_M(n - 1 - i - j, m + j)
    return total


@lru_cache(maxsize=None)
def count_N(s: int, t: int) -> int:
    """``M(s - t, 2t - s)``, indexed by length ``s`` and symbol count ``t``."""
    n, m = s - t, 2 * t - s
    if n < 0 or m < 0:
        return 0
    if n == 0:
        return factorial(m)
    total = (2 * t - s) * count_N(s - 1, t - 1)
    # k = i + j and l = 2i + j in the M recurrence
    for k in range(s - t):
        for l in range(k, 2 * k + 1):
            i = l - k
            total += comb(l, 2 * k - l) * count_N(2 * i, i) * count_N(s - 2 - l, t - 1 - i)
    return total


def count_planar_loopless(n: int) -> int:
    if n < 0:
        raise DomainError("n must be nonnegative")
    return 2 * factorial(4 * n + 1) // (factorial(n + 1) * factorial(3 * n + 2))


def count_Nprime(n: int, m: int) -> int:
    """``T(n, m)`` by enumeration."""
    return sum(has_Nprime(w) for w in gen_words(n, m))


def count_by_enumeration(prop: str, n: int, m: int = 0) -> int:
    pred = PREDICATES[prop]
    return sum(pred(w) for w in gen_words(n, m))


# -- the functional equation --------------------------------------------------------

Series = dict  # (i, j) -> int, coefficient of x^i y^j


def _mul(a: Series, b: Series, deg: int) -> Series:
    out: Series = {}
    for (i, j), c in a.items():
        for (k, l), d in b.items():
            if i + j + k + l <= deg:
                out[i + k, j + l] = out.get((i + k, j + l), 0) + c * d
    return {key: c for key, c in out.items() if c}


def _add(*terms: Series) -> Series:
    out: Series = {}
    for t in terms:
        for key, c in t.items():
            out[key] = out.get(key, 0) + c
    return {key: c for key, c in out.items() if c}


def _inverse_one_minus(a: Series, deg: int) -> Series:
    """``1 / (1 - a)`` for ``a`` without constant term."""
    assert (0, 0) not in a
    out: Series = {(0, 0): 1}
    power: Series = {(0, 0): 1}
    for _ in range(deg):
        power = _mul(power, a, deg)
        if not power:
            break
        out = _add(out, power)
    return out


@dataclass(frozen=True)
class FReport:
    degree: int
    table: dict                      # (n, m) -> T(n, m)
    lhs: dict
    rhs: dict
    mismatches: tuple[tuple[tuple[int, int], int, int], ...]

    @property
    def holds(self) -> bool:
        return not self.mismatches

    @property
    def first_mismatch(self):
        return self.mismatches[0] if self.mismatches else None


def verify_F_equation(degree: int) -> FReport:
    """Check ``F(xy,y) = 1 + y F(xy,y) + xy F(xy,y)^2 / (1 - y F(xy,0))``
    coefficientwise in ``x^i y^j`` for ``i + j <= degree``, where
    ``F(x,y) = sum T(n,m) x^n y^m`` and ``T`` is counted by enumeration."""
    if not 0 <= degree <= MAX_F_DEGREE:
        raise DomainError(f"degree must be in 0..{MAX_F_DEGREE}")
    table = {(n, m): count_Nprime(n, m)
             for n in range(degree // 2 + 1) for m in range(degree - 2 * n + 1)}
    # F(xy, y): T(n,m) lands on x^n y^(n+m), of total degree 2n+m
    fxy = {(n, n + m): c for (n, m), c in table.items() if c}
    f0 = {(n, n): c for (n, m), c in table.items() if m == 0 and c}
    y: Series = {(0, 1): 1}
    xy: Series = {(1, 1): 1}
    lhs = fxy
    rhs = _add({(0, 0): 1}, _mul(y, fxy, degree),
               _mul(_mul(xy, _mul(fxy, fxy, degree), degree),
                    _inverse_one_minus(_mul(y, f0, degree), degree), degree))
    keys = sorted(set(lhs) | set(rhs), key=lambda k: (k[0] + k[1], k))
    bad = tuple((k, lhs.get(k, 0), rhs.get(k, 0)) for k in keys
                if lhs.get(k, 0) != rhs.get(k, 0))
    return FReport(degree, table, lhs, rhs, bad)


# -- words and loopless maps ----------------------------------------------------

def word_to_map(w: Sequence[Hashable]) -> tuple[RootedMap, frozenset[int]]:
    """The rooted loopless map of a P-word, with its canonical spanning tree.

    Positions of ``w`` are the flags; the chords colored 1 are the sinks."""
    w = tuple(w)
    if not has_P(w):
        raise DomainError(f"{''.join(map(str, w))!r} does not have property P")
    if not w:
        raise DomainError("the empty word has no root")
    pos = occurrences(w)
    snk = sinks(w)
    chords = [tuple(p) for p in pos.values()]
    tree = [p[0] for s, p in pos.items() if s in snk]
    return reconstruct(BicoloredDiagram.build(range(len(w)), chords, tree))


def map_to_word(r: RootedMap, tree) -> tuple[str, ...]:
    """Tour word of ``tree`` from the root, in letters."""
    return letters(double_occurrence_word(diagram_of(r, tree)))


def loopless_word(r: RootedMap) -> tuple[str, ...]:
    """Inverse of :func:`word_to_map`: the tour word of the Late DFS-tree."""
    from .dfs import late_tree

    return map_to_word(r, late_tree(r))
