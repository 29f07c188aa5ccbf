"""Structural parameters of posets: height, width, triviality, 2-dimension."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .embedding import cube_host, exists_embedding, find_embedding, poset_host
from .errors import BudgetError
from .poset import NAMED, Poset

__all__ = ["PosetParameters", "parameters", "is_trivial", "dim2", "is_isomorphic", "DIM2_CAP"]

DIM2_CAP = 7


@dataclass(frozen=True)
class PosetParameters:
    height: int
    width: int
    trivial: bool

    def to_json_obj(self) -> dict:
        return {"height": self.height, "width": self.width, "trivial": self.trivial}


def parameters(p: Poset) -> PosetParameters:
    return PosetParameters(height=p.height, width=p.width, trivial=is_trivial(p))


def is_trivial(p: Poset) -> bool:
    """True iff ``p`` contains neither V nor its dual as an induced subposet."""
    host = poset_host(p)
    return not (exists_embedding(NAMED["V"], host) or exists_embedding(NAMED["L"], host))


def dim2(p: Poset, cap: int = DIM2_CAP) -> int:
    """Least N such that Q_N contains an induced copy of ``p``."""
    if p.size <= 1:
        return 0
    start = math.ceil(math.log2(p.size))
    if start > cap:
        raise BudgetError(f"dim2 needs N >= {start}, above cap {cap}")
    for n in range(start, cap + 1):
        if exists_embedding(p, cube_host(n)):
            return n
    raise BudgetError(f"no embedding found up to N={cap} (last N tried: {cap})")


def _signature(p: Poset) -> list[tuple[int, int, int, int]]:
    return sorted(
        (p.heights[a], p.coheights[a], p.up(a).bit_count(), p.down(a).bit_count())
        for a in range(p.size)
    )


def is_isomorphic(p1: Poset, p2: Poset) -> bool:
    if p1.size != p2.size or _signature(p1) != _signature(p2):
        return False
    # An induced embedding between equal-size posets is a bijection.
    return find_embedding(p1, p2) is not None
