"""Small helpers for Python ints used as bitsets."""

from __future__ import annotations

from typing import Iterator


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


def low_bits(mask: int, count: int) -> int:
    """Return the ``count`` lowest set bits of ``mask``."""
    out = 0
    while count and mask:
        low = mask & -mask
        out |= low
        mask ^= low
        count -= 1
    return out


def deposit(index: int, positions: list[int]) -> int:
    """Scatter the bits of ``index`` onto ``positions`` (bit j goes to positions[j])."""
    out = 0
    j = 0
    while index:
        if index & 1:
            out |= 1 << positions[j]
        index >>= 1
        j += 1
    return out


def elements(code: int) -> list[int]:
    """1-based ground-set elements of a subset code."""
    return [i + 1 for i in iter_bits(code)]


def code_of(elems) -> int:
    """Subset code of a collection of 1-based elements."""
    out = 0
    for e in elems:
        out |= 1 << (e - 1)
    return out
