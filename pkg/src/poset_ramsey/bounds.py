"""Closed-form bounds on R(P, Q_n) with provenance tags.

Tags name the formula behind each number:

* ``THM1_TRIVIAL``: n + h - 1 <= R <= n + h + 2 log2 w + 2 (the lower end
  holds for every poset through the layered coloring).
* ``THM1_NONTRIVIAL``: R <= h n + dim2; the n + n / (15 log2 n) lower end is
  only valid for unspecified large n and is reported separately.
* ``THM4_CHAIN``: R(C_t, Q_n) = n + t - 1.
* ``THM4_TWO_CHAINS``: R(C_{t1,t2}, Q_n) = n + t1 + 1.
* ``THM5``: R(C_{t,t-1,t'}, Q_n) = n + t + 2.
* ``COR7``: trivial P with w >= 2 lies in [n + h + 1, n + h + log2 w + 1/2 log2 log2 w + 1).
* ``TABLE1``: exact values quoted from the small-poset table (antichains A_3, A_4).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .errors import ParameterError
from .params import dim2, is_trivial
from .poset import Poset

__all__ = [
    "BoundReport",
    "ramsey_bounds",
    "chain_parts",
    "sperner_alpha",
    "walzer_union_bound",
    "glue_bound",
    "cor7_upper",
]


@dataclass(frozen=True)
class BoundReport:
    """``upper`` is exclusive when ``upper_strict``; ``best_integer_upper`` is always inclusive."""

    lower: float
    upper: float
    upper_strict: bool
    exact: int | None
    provenance: tuple[str, ...]
    asymptotic_lower: float | None = None
    notes: tuple[str, ...] = field(default=())

    @property
    def best_integer_upper(self) -> int:
        if self.upper_strict:
            return math.ceil(self.upper) - 1
        return math.floor(self.upper)

    def contains(self, value: int) -> bool:
        if value < self.lower:
            return False
        return value < self.upper if self.upper_strict else value <= self.upper

    def to_json_obj(self) -> dict:
        return {
            "lower": self.lower,
            "upper": self.upper,
            "upper_strict": self.upper_strict,
            "best_integer_upper": self.best_integer_upper,
            "exact": self.exact,
            "provenance": list(self.provenance),
            "asymptotic_lower": self.asymptotic_lower,
            "notes": list(self.notes),
        }


def chain_parts(p: Poset) -> list[int] | None:
    """Chain sizes (non-increasing) if ``p`` is a parallel composition of chains."""
    seen = 0
    parts = []
    for a in range(p.size):
        if seen >> a & 1:
            continue
        block = (1 << a) | p.up(a) | p.down(a)
        members = [b for b in range(p.size) if block >> b & 1]
        for b in members:
            if (1 << b) | p.up(b) | p.down(b) != block:
                return None
        seen |= block
        parts.append(len(members))
    return sorted(parts, reverse=True)


def cor7_upper(n: int, h: int, w: int) -> float:
    return n + h + math.log2(w) + 0.5 * math.log2(math.log2(w)) + 1


def _exact(value: int, tag: str) -> BoundReport:
    return BoundReport(value, value, False, value, (tag,))


def ramsey_bounds(p: Poset, n: int) -> BoundReport:
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    h, w = p.height, p.width
    if is_trivial(p):
        parts = chain_parts(p)
        assert parts is not None, "trivial posets are chain compositions"
        if len(parts) == 1:
            return _exact(n + parts[0] - 1, "THM4_CHAIN")
        if len(parts) == 2:
            return _exact(n + parts[0] + 1, "THM4_TWO_CHAINS")
        if len(parts) == 3 and parts[0] >= 2 and parts[1] == parts[0] - 1:
            return _exact(n + parts[0] + 2, "THM5")
        if parts in ([1, 1, 1], [1, 1, 1, 1]):
            return _exact(n + 3, "TABLE1")
        return BoundReport(n + h + 1, cor7_upper(n, h, w), True, None, ("COR7",))
    upper = h * n + dim2(p)
    asym = n + n / (15 * math.log2(n)) if n >= 2 else None
    return BoundReport(
        n + h - 1,
        upper,
        False,
        None,
        ("THM1_TRIVIAL", "THM1_NONTRIVIAL"),
        asymptotic_lower=asym,
        notes=("asymptotic_lower holds only for sufficiently large n",),
    )


def sperner_alpha(l: int) -> int:
    """Least N >= 0 with binom(N, floor(N/2)) >= l."""
    if l < 1:
        raise ParameterError(f"l must be >= 1, got {l}")
    big_n = 0
    while math.comb(big_n, big_n // 2) < l:
        big_n += 1
    return big_n


def walzer_union_bound(part_bounds: Sequence[int], l: int | None = None) -> int:
    """max of the parts' Ramsey bounds plus the Sperner number of their count."""
    l = len(part_bounds) if l is None else l
    if l != len(part_bounds):
        raise ParameterError(f"l={l} but {len(part_bounds)} part bounds were given")
    if l < 2:
        raise ParameterError(f"the union bound needs at least 2 parts, got {l}")
    return max(part_bounds) + sperner_alpha(l)


def glue_bound(c1: float, c2: float) -> float:
    """Leading constant for the glued poset (an o(1) term is implied)."""
    if not (c1 > 0 and c2 > 0):
        raise ParameterError(f"constants must be positive, got {c1}, {c2}")
    return c1 + c2
