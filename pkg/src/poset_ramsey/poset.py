"""Finite posets stored as strict relations over bitsets.

Elements are the integers ``0..m-1``.  For every element ``a`` the poset
keeps two bitmasks: ``up(a)`` (elements strictly above ``a``) and
``down(a)`` (elements strictly below).  The reflexive order is never stored.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Sequence

from .bits import iter_bits
from .errors import ConstructionError

__all__ = [
    "Poset",
    "chain",
    "antichain",
    "parallel",
    "chain_composition",
    "multipartite",
    "subdivided_diamond",
    "boolean_cube",
    "glue",
    "named",
    "NAMED",
]


class Poset:
    """Immutable finite strict partial order.

    Parameters
    ----------
    size : int
        Number of elements.
    pairs : iterable of (a, b)
        Generating relations ``a < b``; the transitive closure is taken.
    """

    __slots__ = ("size", "_up", "_down", "__dict__")

    def __init__(self, size: int, pairs: Iterable[tuple[int, int]] = ()):
        up = [0] * size
        for a, b in pairs:
            if not (0 <= a < size and 0 <= b < size):
                raise ConstructionError(f"relation ({a}, {b}) outside 0..{size - 1}")
            up[a] |= 1 << b
        self._init_from_up(size, _transitive_closure(up))

    @classmethod
    def from_up_masks(cls, up: Sequence[int], closed: bool = False) -> "Poset":
        """Build from per-element ``up`` masks, closing transitively unless told they are closed."""
        self = cls.__new__(cls)
        masks = list(up) if closed else _transitive_closure(list(up))
        self._init_from_up(len(masks), masks)
        return self

    def _init_from_up(self, size: int, up: list[int]) -> None:
        self.size = size
        down = [0] * size
        for a in range(size):
            if up[a] >> a & 1:
                raise ConstructionError(f"relation is not irreflexive (cycle through {a})")
            for b in iter_bits(up[a]):
                down[b] |= 1 << a
        self._up = tuple(up)
        self._down = tuple(down)

    # -- relation queries -------------------------------------------------

    def less(self, a: int, b: int) -> bool:
        return bool(self._up[a] >> b & 1)

    def leq(self, a: int, b: int) -> bool:
        return a == b or self.less(a, b)

    def comparable(self, a: int, b: int) -> bool:
        return a == b or bool((self._up[a] | self._down[a]) >> b & 1)

    def up(self, a: int) -> int:
        return self._up[a]

    def down(self, a: int) -> int:
        return self._down[a]

    @property
    def up_masks(self) -> tuple[int, ...]:
        return self._up

    @property
    def down_masks(self) -> tuple[int, ...]:
        return self._down

    def pairs(self) -> list[tuple[int, int]]:
        """All strict pairs ``(a, b)`` with ``a < b``, sorted."""
        return [(a, b) for a in range(self.size) for b in iter_bits(self._up[a])]

    def matrix(self) -> list[list[bool]]:
        return [[self.less(a, b) for b in range(self.size)] for a in range(self.size)]

    def minimum(self) -> int | None:
        """The element below every other element, if any."""
        full = (1 << self.size) - 1
        for a in range(self.size):
            if self._up[a] | (1 << a) == full:
                return a
        return None

    def maximum(self) -> int | None:
        full = (1 << self.size) - 1
        for a in range(self.size):
            if self._down[a] | (1 << a) == full:
                return a
        return None

    def induced(self, elems: Sequence[int]) -> "Poset":
        """Induced subposet on ``elems``; element ``i`` of the result is ``elems[i]``."""
        index = {e: i for i, e in enumerate(elems)}
        up = [0] * len(elems)
        for i, e in enumerate(elems):
            for b in iter_bits(self._up[e]):
                j = index.get(b)
                if j is not None:
                    up[i] |= 1 << j
        return Poset.from_up_masks(up, closed=True)

    # -- derived data -----------------------------------------------------

    @cached_property
    def heights(self) -> tuple[int, ...]:
        """Size of the longest chain with top element ``a``, for each ``a``."""
        order = sorted(range(self.size), key=lambda a: self._down[a].bit_count())
        h = [1] * self.size
        for a in order:
            best = 0
            for b in iter_bits(self._down[a]):
                if h[b] > best:
                    best = h[b]
            h[a] = best + 1
        return tuple(h)

    @cached_property
    def coheights(self) -> tuple[int, ...]:
        """Size of the longest chain with bottom element ``a``, for each ``a``."""
        order = sorted(range(self.size), key=lambda a: self._up[a].bit_count())
        h = [1] * self.size
        for a in order:
            best = 0
            for b in iter_bits(self._up[a]):
                if h[b] > best:
                    best = h[b]
            h[a] = best + 1
        return tuple(h)

    @property
    def height(self) -> int:
        return max(self.heights, default=0)

    @cached_property
    def width(self) -> int:
        return len(max_antichain(self))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.size == other.size and self._up == other._up

    def __hash__(self) -> int:
        return hash((self.size, self._up))

    def __repr__(self) -> str:
        return f"Poset(size={self.size}, pairs={self.pairs()})"


def _transitive_closure(up: list[int]) -> list[int]:
    # Warshall over bitset rows.
    size = len(up)
    up = list(up)
    for k in range(size):
        bit = 1 << k
        row = up[k]
        for a in range(size):
            if up[a] & bit:
                up[a] |= row
    return up


def max_antichain(p: Poset) -> list[int]:
    """A maximum antichain, via branch-and-bound max clique on the incomparability graph."""
    size = p.size
    if size == 0:
        return []
    full = (1 << size) - 1
    adj = [full & ~(p.up(a) | p.down(a) | (1 << a)) for a in range(size)]
    best = [0]
    best_size = [0]

    def expand(clique: int, clique_size: int, cand: int, excl: int) -> None:
        if not cand:
            if clique_size > best_size[0]:
                best[0] = clique
                best_size[0] = clique_size
            return
        if clique_size + cand.bit_count() <= best_size[0]:
            return
        pivot_pool = cand | excl
        pivot = max(iter_bits(pivot_pool), key=lambda u: (adj[u] & cand).bit_count())
        for v in list(iter_bits(cand & ~adj[pivot])):
            bit = 1 << v
            expand(clique | bit, clique_size + 1, cand & adj[v], excl & adj[v])
            cand &= ~bit
            excl |= bit
            if clique_size + cand.bit_count() <= best_size[0]:
                return

    expand(0, 0, full, 0)
    return list(iter_bits(best[0]))


# -- constructions ------------------------------------------------------------


def chain(t: int) -> Poset:
    return Poset(t, ((i, i + 1) for i in range(t - 1)))


def antichain(l: int) -> Poset:
    return Poset(l)


def parallel(*parts: Poset) -> Poset:
    """Parallel composition: disjoint union with all cross pairs incomparable."""
    up: list[int] = []
    offset = 0
    for part in parts:
        up.extend(m << offset for m in part.up_masks)
        offset += part.size
    return Poset.from_up_masks(up, closed=True)


def chain_composition(*ts: int) -> Poset:
    ts = sorted(ts, reverse=True)
    return parallel(*(chain(t) for t in ts))


def multipartite(*ts: int) -> Poset:
    """Complete multipartite poset K_{t1,...,tl}: layer i lies entirely below layer j > i."""
    up: list[int] = []
    start = 0
    total = sum(ts)
    for t in ts:
        above = ((1 << total) - 1) & ~((1 << (start + t)) - 1)
        up.extend([above] * t)
        start += t
    return Poset.from_up_masks(up, closed=True)


def subdivided_diamond(s: int, t: int) -> Poset:
    """SD_{s,t}: chains of s and t vertices plus a common minimum and maximum.

    Element 0 is the minimum, ``1..s`` the first chain, ``s+1..s+t`` the
    second and ``s+t+1`` the maximum.
    """
    top = s + t + 1
    pairs = [(0, 1), (0, s + 1), (s, top), (s + t, top)]
    pairs += [(i, i + 1) for i in range(1, s)]
    pairs += [(i, i + 1) for i in range(s + 1, s + t)]
    return Poset(s + t + 2, pairs)


def boolean_cube(n: int) -> Poset:
    """Q_n with element ``S`` the subset with code ``S``."""
    return Poset.from_up_masks(cube_up_masks(n), closed=True)


def cube_up_masks(n: int) -> list[int]:
    """Strict up-set masks of Q_n, indexed by subset code."""
    size = 1 << n
    closed = [0] * size
    for s in range(size - 1, -1, -1):
        mask = 1 << s
        for i in range(n):
            if not s >> i & 1:
                mask |= closed[s | 1 << i]
        closed[s] = mask
    return [closed[s] & ~(1 << s) for s in range(size)]


def glue(p1: Poset, p2: Poset) -> Poset:
    """Identify the minimum of ``p1`` with the maximum of ``p2``.

    The result keeps the elements of ``p1`` at ``0..m1-1`` and appends the
    elements of ``p2`` other than its maximum, in their original order.
    """
    low = p1.minimum()
    if low is None:
        raise ConstructionError("glue: left poset has no minimum")
    high = p2.maximum()
    if high is None:
        raise ConstructionError("glue: right poset has no maximum")
    m1 = p1.size
    index = {}
    nxt = m1
    for b in range(p2.size):
        if b == high:
            index[b] = low
        else:
            index[b] = nxt
            nxt += 1
    pairs = p1.pairs() + [(index[a], index[b]) for a, b in p2.pairs()]
    return Poset(nxt, pairs)


# Vertex order follows the letters A, B, C, D of the textbook definitions.
NAMED = {
    "V": Poset(3, [(2, 0), (2, 1)]),
    "L": Poset(3, [(0, 2), (1, 2)]),
    "N": Poset(4, [(0, 2), (1, 2), (1, 3)]),
    "J": Poset(4, [(1, 2), (2, 3), (1, 0)]),
}


def named(name: str) -> Poset:
    try:
        return NAMED[name]
    except KeyError:
        raise ConstructionError(f"unknown named poset {name!r}") from None
