"""Induced-subposet embedding search.

Hosts are either arbitrary :class:`~poset_ramsey.poset.Poset` objects or
(colour-restricted) Boolean lattices.  Both are converted to a :class:`Host`:
vertex indices with strict up/down bitmasks and, for pruning, the longest
chain inside the host ending (height) and starting (coheight) at each vertex.

The search is depth-first with forward checking: assigning a pattern vertex
intersects the candidate sets of all unassigned pattern vertices with the
up-set, down-set or incomparability set of the chosen host vertex.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

from .bits import iter_bits, low_bits
from .errors import BudgetError
from .lattice import Color, ColoredLattice
from .poset import Poset, cube_up_masks

__all__ = [
    "Host",
    "Embedding",
    "CopySet",
    "poset_host",
    "cube_host",
    "lattice_host",
    "find_embedding",
    "enumerate_copies",
    "count_embeddings",
    "find_monochromatic_copy",
    "is_embedding",
    "is_copy",
    "DEFAULT_COPY_CAP",
    "MAX_CUBE_HOST_DIMENSION",
]

DEFAULT_COPY_CAP = 64
MAX_CUBE_HOST_DIMENSION = 14


@dataclass(frozen=True, eq=False)
class Host:
    """Search-ready host poset.

    ``allowed`` masks the usable vertices; ``up``/``down``/``inc`` are already
    restricted to it.  ``cube_dim`` is set when vertex indices are subset codes
    of Q_N; ``symmetric`` additionally asserts that ``allowed`` is invariant
    under permutations of the ground set (true for layered colorings).
    """

    size: int
    allowed: int
    up: tuple[int, ...]
    down: tuple[int, ...]
    inc: tuple[int, ...]
    heights: tuple[int, ...]
    coheights: tuple[int, ...]
    cube_dim: int | None = None
    symmetric: bool = False

    def leq(self, a: int, b: int) -> bool:
        """Unrestricted order of the underlying host (independent of ``allowed``)."""
        if self.cube_dim is not None:
            return a & b == a
        return a == b or bool(self.up[a] >> b & 1)

    def vertex_count(self) -> int:
        return self.allowed.bit_count()


@dataclass(frozen=True)
class Embedding:
    """Order embedding: pattern vertex ``i`` goes to host vertex ``map[i]``."""

    map: tuple[int, ...]

    @property
    def pattern_size(self) -> int:
        return len(self.map)

    def image(self) -> "CopySet":
        return CopySet(tuple(sorted(self.map)))


@dataclass(frozen=True)
class CopySet:
    """Unordered vertex set of a copy, stored sorted."""

    vertices: tuple[int, ...]

    def to_json_obj(self) -> list[int]:
        return list(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)


# -- hosts ---------------------------------------------------------------------


def poset_host(p: Poset) -> Host:
    full = (1 << p.size) - 1
    inc = tuple(full & ~(p.up(a) | p.down(a) | (1 << a)) for a in range(p.size))
    return Host(
        size=p.size,
        allowed=full,
        up=p.up_masks,
        down=p.down_masks,
        inc=inc,
        heights=p.heights,
        coheights=p.coheights,
    )


@lru_cache(maxsize=16)
def _cube_masks(n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    up = cube_up_masks(n)
    size = 1 << n
    down = [0] * size
    # down-set of S mirrors the up-set of its complement.
    full = size - 1
    for s in range(size):
        comp_up = up[full ^ s]
        mask = 0
        for b in iter_bits(comp_up):
            mask |= 1 << (full ^ b)
        down[s] = mask
    return tuple(up), tuple(down)


@lru_cache(maxsize=None)
def _ground_masks(n: int) -> tuple[int, ...]:
    """For each ground index ``i``, the set of codes containing ``i``."""
    out = []
    for i in range(n):
        mask = 0
        for v in range(1 << n):
            if v >> i & 1:
                mask |= 1 << v
        out.append(mask)
    return tuple(out)


def _strict_down_set(n: int, codes: int) -> int:
    """All codes strictly below some member of ``codes`` (as a vertex mask)."""
    has = _ground_masks(n)
    below = 0
    for i in range(n):
        below |= (codes & has[i]) >> (1 << i)
    for i in range(n):
        below |= (below & has[i]) >> (1 << i)
    return below


def _strict_up_set(n: int, codes: int) -> int:
    has = _ground_masks(n)
    above = 0
    for i in range(n):
        above |= (codes & ~has[i]) << (1 << i)
    for i in range(n):
        above |= (above & ~has[i]) << (1 << i)
    return above


def _restricted_heights(n: int, allowed: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    size = 1 << n
    full = size - 1
    height = [0] * size
    best_below = [0] * size  # longest allowed chain topped at some u <= v
    for v in range(size):
        best = 0
        w = v
        while w:
            low = w & -w
            b = best_below[v ^ low]
            if b > best:
                best = b
            w ^= low
        if allowed >> v & 1:
            height[v] = best + 1
            best_below[v] = best + 1
        else:
            best_below[v] = best
    coheight = [0] * size
    best_above = [0] * size
    for v in range(full, -1, -1):
        best = 0
        w = full ^ v
        while w:
            low = w & -w
            b = best_above[v | low]
            if b > best:
                best = b
            w ^= low
        if allowed >> v & 1:
            coheight[v] = best + 1
            best_above[v] = best + 1
        else:
            best_above[v] = best
    return tuple(height), tuple(coheight)


def cube_host(n: int, allowed: int | None = None, symmetric: bool | None = None) -> Host:
    """Q_n, optionally restricted to the vertex mask ``allowed``.

    ``symmetric`` defaults to True only for the unrestricted cube; callers
    restricting to a layered set of vertices may pass True explicitly.
    """
    if n > MAX_CUBE_HOST_DIMENSION:
        raise BudgetError(f"host lattice dimension {n} exceeds cap {MAX_CUBE_HOST_DIMENSION}")
    size = 1 << n
    full = (1 << size) - 1
    if allowed is None:
        allowed = full
        if symmetric is None:
            symmetric = True
    up_all, down_all = _cube_masks(n)
    up = tuple(m & allowed for m in up_all)
    down = tuple(m & allowed for m in down_all)
    inc = tuple(allowed & ~(up_all[v] | down_all[v] | (1 << v)) for v in range(size))
    heights, coheights = _restricted_heights(n, allowed)
    return Host(size, allowed, up, down, inc, heights, coheights, cube_dim=n, symmetric=bool(symmetric))


def lattice_host(c: ColoredLattice, color) -> Host:
    """The vertices of ``c`` with the given color, as a host."""
    layered = c.layered_blue_layers() is not None
    return cube_host(c.n_ground, c.mask(color), symmetric=layered)


def as_host(obj) -> Host:
    if isinstance(obj, Host):
        return obj
    if isinstance(obj, Poset):
        return poset_host(obj)
    raise TypeError(f"cannot use {type(obj).__name__} as a host")


# -- search core -----------------------------------------------------------------

_UP, _DOWN, _INC = 0, 1, 2


def _relation(pattern: Poset, i: int, j: int) -> int:
    if pattern.less(i, j):
        return _UP
    if pattern.less(j, i):
        return _DOWN
    return _INC


def _twin_pairs(pattern: Poset) -> list[tuple[int, int]]:
    """Pairs i < j of vertices with identical relations to all other vertices."""
    out = []
    for i in range(pattern.size):
        for j in range(i + 1, pattern.size):
            if pattern.less(i, j) or pattern.less(j, i):
                continue
            others = ~((1 << i) | (1 << j))
            if pattern.up(i) & others == pattern.up(j) & others and pattern.down(i) & others == pattern.down(j) & others:
                out.append((i, j))
    return out


def _degree_order(pattern: Poset) -> list[int]:
    deg = [(pattern.up(a) | pattern.down(a)).bit_count() for a in range(pattern.size)]
    return sorted(range(pattern.size), key=lambda a: (-deg[a], a))


def _is_canonical(code: int, cells: list[int]) -> bool:
    # ``x`` is a prefix of ``cell`` iff every bit of ``x`` lies below every
    # bit of ``cell - x``, i.e. ``x`` is smaller than the lowest remaining bit.
    for cell in cells:
        x = code & cell
        rest = cell ^ x
        if rest and x >= rest & -rest:
            return False
    return True


def _canonical_candidates(cells: list[int], dom: int) -> list[int]:
    """Members of ``dom`` meeting every cell in a prefix of its (ascending) elements."""
    total = 1
    for cell in cells:
        total *= cell.bit_count() + 1
    if dom.bit_count() <= total:
        return [c for c in iter_bits(dom) if _is_canonical(c, cells)]
    choices = [[low_bits(cell, j) for j in range(cell.bit_count() + 1)] for cell in cells]
    out = [c for c in map(sum, itertools.product(*choices)) if dom >> c & 1]
    out.sort()
    return out


def _refine(cells: list[int], code: int) -> list[int]:
    out = []
    for cell in cells:
        a, b = cell & code, cell & ~code
        if a:
            out.append(a)
        if b:
            out.append(b)
    return out


def _search(
    pattern: Poset,
    host: Host,
    order: Sequence[int],
    on_found: Callable[[tuple[int, ...]], bool],
    use_symmetry: bool = False,
    use_twins: bool = True,
) -> None:
    """Depth-first embedding search; ``on_found`` returns True to stop.

    With ``use_symmetry`` the host must be a ground-permutation invariant
    subset of a cube; each new image is then restricted to subsets meeting
    every cell of the partition generated by earlier images in a prefix.
    This keeps one representative per orbit of the stabiliser, so existence
    is decided exactly, but not every embedding is visited.
    """
    m = pattern.size
    if m == 0:
        on_found(())
        return
    if use_symmetry and not (host.symmetric and host.cube_dim is not None):
        raise ValueError("symmetry reduction needs a permutation-invariant cube host")
    # Canonicalising a later twin could undo the order imposed on the pair, so
    # the two reductions are never combined.
    use_twins = use_twins and not use_symmetry

    hmax = max(host.heights, default=0)
    ge_height = [0] * (hmax + 2)
    ge_coheight = [0] * (hmax + 2)
    for v in iter_bits(host.allowed):
        ge_height[host.heights[v]] |= 1 << v
        ge_coheight[host.coheights[v]] |= 1 << v
    for h in range(hmax - 1, -1, -1):
        ge_height[h] |= ge_height[h + 1]
        ge_coheight[h] |= ge_coheight[h + 1]

    domains = [0] * m
    for a in range(m):
        ph, pc = pattern.heights[a], pattern.coheights[a]
        if ph > hmax or pc > hmax:
            return
        domains[a] = ge_height[ph] & ge_coheight[pc]
        if not domains[a]:
            return

    pos = {v: d for d, v in enumerate(order)}
    # For each depth: list of (later depth, relation) and twin bounds.
    later = []
    for d, i in enumerate(order):
        rel = [(e, _relation(pattern, i, order[e])) for e in range(d + 1, m)]
        later.append(rel)
    twin_after: list[list[tuple[int, bool]]] = [[] for _ in range(m)]
    if use_twins:
        for i, j in _twin_pairs(pattern):
            di, dj = pos[i], pos[j]
            if di < dj:
                twin_after[di].append((dj, True))  # image(j) > image(i)
            else:
                twin_after[dj].append((di, False))  # image(i) < image(j)

    up, down, inc = host.up, host.down, host.inc
    assign = [0] * m
    n = host.cube_dim

    def rec(d: int, doms: list[int], cells: list[int] | None) -> bool:
        dom = doms[d]
        if cells is not None:
            cands = _canonical_candidates(cells, dom)
        else:
            cands = iter_bits(dom)
        rels = later[d]
        twins = twin_after[d]
        for c in cands:
            bit = 1 << c
            new = doms[:]
            ok = True
            masks = (up[c], down[c], inc[c])
            for e, r in rels:
                nd = new[e] & masks[r] & ~bit
                if not nd:
                    ok = False
                    break
                new[e] = nd
            if not ok:
                continue
            for e, greater in twins:
                nd = new[e] & (~((bit << 1) - 1) if greater else bit - 1)
                if not nd:
                    ok = False
                    break
                new[e] = nd
            if not ok:
                continue
            assign[order[d]] = c
            if d + 1 == m:
                if on_found(tuple(assign)):
                    return True
            elif rec(d + 1, new, _refine(cells, c) if cells is not None else None):
                return True
        return False

    if use_symmetry:
        _search_orbits(pattern, host, domains, on_found)
        return
    reordered = [domains[i] for i in order]
    rec(0, reordered, None)


def _search_orbits(pattern: Poset, host: Host, domains: list[int], on_found) -> None:
    """Orbit-pruned search that always branches on the smallest domain.

    Any partial assignment is fixed pointwise by the permutations preserving
    the cells, so choosing the next vertex dynamically keeps pruning exact.
    """
    m = pattern.size
    rel = [[_relation(pattern, i, j) for j in range(m)] for i in range(m)]
    up, down, inc = host.up, host.down, host.inc
    assign = [0] * m
    n = host.cube_dim

    # Comparable pairs (lower, upper) for bound propagation between open vertices.
    pairs = [(i, j) for i in range(m) for j in range(m) if pattern.less(i, j)]

    def propagate(doms: dict[int, int]) -> bool:
        changed = True
        while changed:
            changed = False
            for i, j in pairs:
                if i not in doms or j not in doms:
                    continue
                lo = doms[i] & _strict_down_set(n, doms[j])
                hi = doms[j] & _strict_up_set(n, lo)
                if not lo or not hi:
                    return False
                if lo != doms[i] or hi != doms[j]:
                    doms[i], doms[j] = lo, hi
                    changed = True
        return True

    def rec(doms: dict[int, int], cells: list[int]) -> bool:
        a = min(doms, key=lambda x: (doms[x].bit_count(), x))
        rest = [b for b in doms if b != a]
        row = rel[a]
        for c in _canonical_candidates(cells, doms[a]):
            bit = 1 << c
            masks = (up[c], down[c], inc[c])
            new = {}
            for b in rest:
                nd = doms[b] & masks[row[b]] & ~bit
                if not nd:
                    break
                new[b] = nd
            else:
                assign[a] = c
                if not new:
                    if on_found(tuple(assign)):
                        return True
                elif propagate(new) and rec(new, _refine(cells, c)):
                    return True
        return False

    doms = dict(enumerate(domains))
    if not propagate(doms):
        return
    rec(doms, [(1 << n) - 1] if n else [])


# -- public API -------------------------------------------------------------------


def find_embedding(pattern: Poset, host) -> Embedding | None:
    """Lexicographically least induced embedding of ``pattern`` into ``host``."""
    h = as_host(host)
    found: list[tuple[int, ...]] = []

    def stop(assign):
        found.append(assign)
        return True

    _search(pattern, h, list(range(pattern.size)), stop)
    return Embedding(found[0]) if found else None


def count_embeddings(pattern: Poset, host) -> int:
    """Number of (ordered) embeddings; used by test oracles."""
    h = as_host(host)
    count = [0]

    def tally(assign):
        count[0] += 1
        return False

    _search(pattern, h, _degree_order(pattern), tally, use_twins=False)
    return count[0]


def enumerate_copies(pattern: Poset, host, cap: int = DEFAULT_COPY_CAP) -> list[CopySet]:
    """All distinct vertex sets of ``host`` inducing a copy of ``pattern``, sorted."""
    h = as_host(host)
    if h.size > cap:
        raise BudgetError(f"host has {h.size} vertices, copy enumeration cap is {cap}")
    seen: set[tuple[int, ...]] = set()

    def collect(assign):
        seen.add(tuple(sorted(assign)))
        return False

    _search(pattern, h, _degree_order(pattern), collect)
    return [CopySet(v) for v in sorted(seen)]


def find_monochromatic_copy(pattern: Poset, c: ColoredLattice, color) -> CopySet | None:
    """A copy of ``pattern`` using only vertices of ``color``, or None.

    Layered colorings are invariant under ground-set permutations and are
    searched with orbit pruning.
    """
    h = lattice_host(c, Color.parse(color))
    found: list[tuple[int, ...]] = []

    def stop(assign):
        found.append(assign)
        return True

    _search(pattern, h, _degree_order(pattern), stop, use_symmetry=h.symmetric)
    return CopySet(tuple(sorted(found[0]))) if found else None


def exists_embedding(pattern: Poset, host: Host) -> bool:
    found = []

    def stop(assign):
        found.append(assign)
        return True

    _search(pattern, host, _degree_order(pattern), stop, use_symmetry=host.symmetric and host.cube_dim is not None)
    return bool(found)


# -- independent validation -----------------------------------------------------


def _host_leq(host, a: int, b: int) -> bool:
    if isinstance(host, Poset):
        return host.leq(a, b)
    return host.leq(a, b)


def is_embedding(pattern: Poset, host, mapping: Sequence[int]) -> bool:
    """Direct pairwise check that ``mapping`` is an induced order embedding."""
    if len(mapping) != pattern.size or len(set(mapping)) != len(mapping):
        return False
    for a in range(pattern.size):
        for b in range(pattern.size):
            if pattern.leq(a, b) != _host_leq(host, mapping[a], mapping[b]):
                return False
    return True


def is_copy(pattern: Poset, host, vertices: Sequence[int], allowed: int | None = None) -> bool:
    """Whether ``vertices`` induce a copy of ``pattern`` (brute force over bijections).

    Exponential in the pattern size; meant for re-validation of small copies.
    """
    vertices = list(vertices)
    if len(vertices) != pattern.size or len(set(vertices)) != len(vertices):
        return False
    if allowed is not None and any(not allowed >> v & 1 for v in vertices):
        return False
    for perm in itertools.permutations(vertices):
        if is_embedding(pattern, host, perm):
            return True
    return False
