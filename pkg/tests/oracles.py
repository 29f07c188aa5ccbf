"""Independent reference implementations used by the tests.

Nothing here calls the package's search code.  Copies come from trying
every vertex subset with every bijection.  Arrow relations come from
closing copy masks upward over all 2^(2^N) colorings.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

from hypothesis import strategies as st

from poset_ramsey import expr as E
from poset_ramsey.poset import Poset


def leq_matrix(p: Poset) -> tuple[tuple[bool, ...], ...]:
    return tuple(tuple(a == b or p.less(a, b) for b in range(p.size)) for a in range(p.size))


def naive_cube_copies(p: Poset, dim: int, allowed: int | None = None) -> set[tuple[int, ...]]:
    """Vertex sets of Q_dim (as sorted code tuples) inducing a copy of ``p``."""
    rel = leq_matrix(p)
    m = p.size
    verts = [v for v in range(1 << dim) if allowed is None or allowed >> v & 1]
    out = set()
    for subset in itertools.combinations(verts, m):
        for perm in itertools.permutations(subset):
            if all((perm[a] & perm[b] == perm[a]) == rel[a][b] for a in range(m) for b in range(m)):
                out.add(subset)
                break
    return out


def naive_poset_copies(p: Poset, host: Poset) -> set[tuple[int, ...]]:
    rel = leq_matrix(p)
    hrel = leq_matrix(host)
    m = p.size
    out = set()
    for subset in itertools.combinations(range(host.size), m):
        for perm in itertools.permutations(subset):
            if all(hrel[perm[a]][perm[b]] == rel[a][b] for a in range(m) for b in range(m)):
                out.add(subset)
                break
    return out


def _contains_table(copy_masks: list[int], vertices: int) -> np.ndarray:
    """table[b] is True iff the vertex set b contains one of ``copy_masks``."""
    table = np.zeros(1 << vertices, dtype=bool)
    if copy_masks:
        table[np.array(copy_masks, dtype=np.int64)] = True
    for i in range(vertices):
        view = table.reshape(-1, 2, 1 << i)
        view[:, 1, :] |= view[:, 0, :]
    return table


@lru_cache(maxsize=None)
def _cube_copy_masks(p_key, dim: int) -> list[int]:
    size, pairs = p_key
    p = Poset(size, pairs)
    return [sum(1 << v for v in copy) for copy in naive_cube_copies(p, dim)]


def poset_key(p: Poset):
    return (p.size, tuple(p.pairs()))


def brute_force_arrow(p: Poset, n: int, dim: int) -> bool:
    """Every coloring of Q_dim has a blue ``p`` or a red Q_n (dim <= 4)."""
    assert dim <= 4
    q = Poset.from_up_masks(_cube_up(n), closed=True)
    vertices = 1 << dim
    has_p = _contains_table(_cube_copy_masks(poset_key(p), dim), vertices)
    has_q = _contains_table(_cube_copy_masks(poset_key(q), dim), vertices)
    full = (1 << vertices) - 1
    blues = np.arange(1 << vertices, dtype=np.int64)
    return bool(np.all(has_p[blues] | has_q[full ^ blues]))


def _cube_up(n: int) -> list[int]:
    size = 1 << n
    return [sum(1 << b for b in range(size) if b != a and a & b == a) for a in range(size)]


def is_cluster_of_chains(p: Poset) -> bool:
    """Comparability (plus equality) is transitive, i.e. p is a sum of chains."""
    rel = [[a == b or p.less(a, b) or p.less(b, a) for b in range(p.size)] for a in range(p.size)]
    return all(
        not (rel[a][b] and rel[b][c]) or rel[a][c]
        for a in range(p.size)
        for b in range(p.size)
        for c in range(p.size)
    )


def naturally_labelled_posets(m: int) -> list[Poset]:
    """Every poset on m elements up to isomorphism (with repeats), as closures of i<j relations."""
    pairs = [(i, j) for i in range(m) for j in range(i + 1, m)]
    seen = set()
    out = []
    for bits in range(1 << len(pairs)):
        p = Poset(m, [pr for k, pr in enumerate(pairs) if bits >> k & 1])
        key = p.up_masks
        if key not in seen:
            seen.add(key)
            out.append(p)
    return out


def unlabelled_posets(m: int) -> list[Poset]:
    """One representative per isomorphism class (brute-force relabelling)."""
    reps: list[Poset] = []
    canon_seen = set()
    for p in naturally_labelled_posets(m):
        canon = min(
            tuple(sorted((perm[a], perm[b]) for a, b in p.pairs()))
            for perm in itertools.permutations(range(m))
        )
        if canon not in canon_seen:
            canon_seen.add(canon)
            reps.append(p)
    return reps


# -- hypothesis strategies ------------------------------------------------------


@st.composite
def small_posets(draw, max_size: int = 6):
    m = draw(st.integers(1, max_size))
    pairs = [(i, j) for i in range(m) for j in range(i + 1, m)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    perm = draw(st.permutations(list(range(m))))
    return Poset(m, [(perm[a], perm[b]) for a, b in chosen])


_leaf = st.one_of(
    st.builds(E.Chain, st.integers(1, 4)),
    st.builds(E.Antichain, st.integers(1, 3)),
    st.builds(lambda ps: E.ChainComposition(tuple(ps)), st.lists(st.integers(1, 3), min_size=1, max_size=3)),
    st.builds(lambda ps: E.Multipartite(tuple(ps)), st.lists(st.integers(1, 2), min_size=1, max_size=3)),
    st.builds(E.SubdividedDiamond, st.integers(1, 2), st.integers(1, 2)),
    st.builds(E.BooleanCube, st.integers(0, 2)),
    st.sampled_from([E.Named(n) for n in "VLNJ"]),
)

poset_expressions = st.recursive(
    _leaf,
    lambda inner: st.one_of(
        st.builds(E.ParallelCompose, inner, inner),
        st.builds(E.Glue, inner, inner),
    ),
    max_leaves=3,
)
