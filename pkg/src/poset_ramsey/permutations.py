"""r-proper permutations with their bad-index restrictions; t-close orderings.

Permutations are in one-line notation over 1..k: ``p[i-1]`` is the image of
``i``.  A permutation is r-proper when, for every j in 1..k, at most r
positions l <= j carry a value >= j-1.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Mapping, Sequence

from . import kernels
from .errors import BudgetError, EncodingError, ParameterError

__all__ = [
    "ProperRestriction",
    "RestrictionEncoding",
    "is_permutation",
    "is_r_proper",
    "proper_profile",
    "count_proper",
    "count_proper_bruteforce",
    "proper_restriction",
    "restriction_load",
    "interval_coloring",
    "encode_restriction",
    "decode_restriction",
    "is_t_close",
    "first_far_index",
    "lemma_bound_exponent",
    "window_overflow",
    "relabel",
    "COUNT_CAP",
]

COUNT_CAP = 9


def is_permutation(p: Sequence[int]) -> bool:
    return sorted(p) == list(range(1, len(p) + 1))


def _check(p: Sequence[int]) -> None:
    if not is_permutation(p):
        raise ParameterError(f"{list(p)} is not a permutation of 1..{len(p)}")


def proper_profile(p: Sequence[int]) -> list[int]:
    """``out[j-1] = |{l <= j : p(l) >= j-1}|`` for j = 1..k."""
    _check(p)
    return [sum(1 for v in p[:j] if v >= j - 1) for j in range(1, len(p) + 1)]


def is_r_proper(p: Sequence[int], r: int) -> bool:
    if r < 1:
        raise ParameterError(f"r must be >= 1, got {r}")
    return max(proper_profile(p), default=0) <= r


def count_proper(k: int, r: int) -> int:
    """N(k, r) via the compiled (or fallback) prefix-pruned enumerator."""
    if k < 0 or r < 1:
        raise ParameterError(f"need k >= 0 and r >= 1, got k={k}, r={r}")
    if k > COUNT_CAP:
        raise BudgetError(f"k={k} exceeds the enumeration cap {COUNT_CAP}")
    return kernels.count_r_proper(k, r)


def count_proper_bruteforce(k: int, r: int) -> int:
    """Independent oracle: filter all k! permutations through is_r_proper."""
    if k > COUNT_CAP:
        raise BudgetError(f"k={k} exceeds the enumeration cap {COUNT_CAP}")
    return sum(1 for p in itertools.permutations(range(1, k + 1)) if is_r_proper(p, r))


@dataclass(frozen=True)
class ProperRestriction:
    """A permutation restricted to its bad indices (those with p(i) >= i)."""

    mapping: tuple[tuple[int, int], ...]

    @classmethod
    def from_dict(cls, values: Mapping[int, int]) -> "ProperRestriction":
        return cls(tuple(sorted(values.items())))

    @property
    def bad_indices(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.mapping)

    def as_dict(self) -> dict[int, int]:
        return dict(self.mapping)

    def to_json_obj(self) -> dict:
        return {str(i): v for i, v in self.mapping}


def proper_restriction(p: Sequence[int]) -> ProperRestriction:
    _check(p)
    return ProperRestriction(tuple((i, v) for i, v in enumerate(p, start=1) if v >= i))


def restriction_load(rho: ProperRestriction, k: int) -> int:
    """max over j of |{l in B : l <= j, rho(l) >= j-1}|."""
    return max((sum(1 for i, v in rho.mapping if i <= j and v >= j - 1) for j in range(1, k + 1)), default=0)


def interval_coloring(rho: ProperRestriction) -> dict[int, int]:
    """Greedy first-fit coloring of intervals [i, rho(i)+1] by left endpoint.

    Returns bad index -> color (0-based).  For interval graphs first-fit in
    left-endpoint order uses exactly as many colors as the largest clique.
    """
    color_end: list[int] = []  # right endpoint of the last interval per color
    out: dict[int, int] = {}
    for i, v in sorted(rho.mapping):
        right = v + 1
        for color, end in enumerate(color_end):
            if end < i:
                color_end[color] = right
                out[i] = color
                break
        else:
            out[i] = len(color_end)
            color_end.append(right)
    return out


@dataclass(frozen=True)
class RestrictionEncoding:
    vectors: tuple[str, ...]

    @property
    def k(self) -> int:
        return len(self.vectors[0]) if self.vectors else 0

    def to_json_obj(self) -> list[str]:
        return list(self.vectors)


def encode_restriction(rho: ProperRestriction, r: int, k: int) -> RestrictionEncoding:
    """r binary strings of length k; each run of 1s from i to rho(i) encodes one bad index."""
    if r < 1 or k < 0:
        raise ParameterError(f"need r >= 1 and k >= 0, got r={r}, k={k}")
    for i, v in rho.mapping:
        if not 1 <= i <= v <= k:
            raise EncodingError(f"restriction pair {i}->{v} is not a bad index within 1..{k}")
    if len({v for _, v in rho.mapping}) != len(rho.mapping):
        raise EncodingError("restriction is not injective")
    colors = interval_coloring(rho)
    used = max(colors.values(), default=-1) + 1
    if used > r:
        raise EncodingError(f"restriction needs {used} vectors but r={r}")
    rows = [["0"] * k for _ in range(r)]
    for i, v in rho.mapping:
        row = rows[colors[i]]
        for pos in range(i, v + 1):
            row[pos - 1] = "1"
    return RestrictionEncoding(tuple("".join(row) for row in rows))


def decode_restriction(enc: RestrictionEncoding) -> ProperRestriction:
    out: dict[int, int] = {}
    length = enc.k
    for vec in enc.vectors:
        if len(vec) != length or set(vec) - {"0", "1"}:
            raise EncodingError(f"malformed vector {vec!r}")
        pos = 0
        while pos < length:
            if vec[pos] == "1":
                end = pos
                while end + 1 < length and vec[end + 1] == "1":
                    end += 1
                start = pos + 1
                if start in out:
                    raise EncodingError(f"two runs start at index {start}")
                out[start] = end + 1
                pos = end + 1
            else:
                pos += 1
    return ProperRestriction.from_dict(out)


def relabel(tau: Sequence[int], sigma: Sequence[int]) -> list[int]:
    """Rename the elements of ``tau`` so that ``sigma`` becomes (1, ..., k)."""
    rank = {y: i for i, y in enumerate(sigma, start=1)}
    if sorted(rank) != sorted(tau):
        raise ParameterError("orderings are over different ground sets")
    return [rank[y] for y in tau]


def is_t_close(tau: Sequence[int], t: int) -> bool:
    """For each i <= k-t: [i] within the first i+t of tau, or the first i of tau within [i+t]."""
    _check(tau)
    k = len(tau)
    for i in range(1, k - t + 1):
        head = set(tau[: i + t])
        if all(x in head for x in range(1, i + 1)):
            continue
        if all(y <= i + t for y in tau[:i]):
            continue
        return False
    return True


def first_far_index(tau: Sequence[int], t: int) -> int | None:
    """Least i violating t-closeness, or None."""
    _check(tau)
    k = len(tau)
    for i in range(1, k - t + 1):
        head = set(tau[: i + t])
        if not all(x in head for x in range(1, i + 1)) and not all(y <= i + t for y in tau[:i]):
            return i
    return None


def window_overflow(p: Sequence[int], t: int) -> int:
    """max over j of |{l <= j : p(l) > j+t}|."""
    _check(p)
    return max((sum(1 for v in p[:j] if v > j + t) for j in range(1, len(p) + 1)), default=0)


def lemma_bound_exponent(k: int, r: int) -> float:
    """The exponent (r + log2 r) * k of the counting bound."""
    return (r + math.log2(r)) * k
