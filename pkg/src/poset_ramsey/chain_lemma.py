"""Red cube or blue Y-chain: the constructive labelling argument.

Given a coloring of Q(X u Y) and an ordering ``tau`` of Y, every subset X'
of X receives a label ``l`` such that ``X' u Y[l]`` is red and labels grow
with inclusion.  When that succeeds, ``X' -> X' u Y[l_X']`` is a red copy of
Q_|X|; when some subset has no red vertex at or above its floor, the recorded
support chains assemble into a blue Y-chain instead.

Ground elements are 1-based (element ``i`` is bit ``i-1`` of a subset code).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence, Union

from . import kernels
from .bits import code_of, deposit, elements, iter_bits
from .errors import ParameterError
from .lattice import ColoredLattice

__all__ = [
    "RedCube",
    "BlueChain",
    "ChainLemmaResult",
    "LabelTable",
    "run_chain_lemma",
    "label_table",
    "label_properties_hold",
    "verify_certificate",
    "chain_or_cube",
    "result_from_json",
    "result_to_json",
]


@dataclass(frozen=True)
class RedCube:
    """Labels indexed by the compressed X sub-index (see ``x_subset``)."""

    x_mask: int
    tau: tuple[int, ...]
    labels: tuple[int, ...]

    @property
    def x_positions(self) -> list[int]:
        return list(iter_bits(self.x_mask))

    def x_subset(self, index: int) -> int:
        return deposit(index, self.x_positions)

    def image(self) -> list[int]:
        """phi(X') = X' u Y[label], listed by compressed sub-index."""
        prefix = _prefix_codes(self.tau)
        return [self.x_subset(s) | prefix[lab] for s, lab in enumerate(self.labels)]

    def to_json_obj(self) -> dict:
        return {"kind": "red_cube", "x_mask": self.x_mask, "tau": list(self.tau), "labels": list(self.labels)}


@dataclass(frozen=True)
class BlueChain:
    """Vertices Z_0 < ... < Z_k of a blue Y-chain for ``tau``."""

    tau: tuple[int, ...]
    vertices: tuple[int, ...]

    def to_json_obj(self) -> dict:
        return {"kind": "blue_ychain", "tau": list(self.tau), "vertices": list(self.vertices)}


ChainLemmaResult = Union[RedCube, BlueChain]


@dataclass(frozen=True)
class LabelTable:
    """Raw labelling state, exposed for property checks.

    ``labels[s]`` is -1 for subsets never reached; ``parent[s]`` is the
    least maximising proper subset used as W.
    """

    x_mask: int
    tau: tuple[int, ...]
    labels: tuple[int, ...]
    parent: tuple[int, ...]
    failed_at: int
    failed_floor: int

    def support_chain(self, index: int) -> list[int]:
        """The blue chain C^X below X u Y[l_X] for a labelled subset."""
        return _support_chain(self, index, self.labels[index])


def _prefix_codes(tau: Sequence[int]) -> list[int]:
    out = [0]
    for y in tau:
        out.append(out[-1] | 1 << (y - 1))
    return out


def _check_partition(c: ColoredLattice, x_mask: int, tau: Sequence[int]) -> None:
    n = c.n_ground
    if len(tau) < 1:
        raise ParameterError("the ordering of Y must contain at least one element")
    if len(set(tau)) != len(tau):
        raise ParameterError(f"ordering {list(tau)} repeats an element")
    if any(not 1 <= y <= n for y in tau):
        raise ParameterError(f"ordering {list(tau)} has elements outside 1..{n}")
    y_mask = code_of(tau)
    full = (1 << n) - 1
    if x_mask < 0 or x_mask & ~full:
        raise ParameterError(f"x_mask {x_mask} has bits outside the ground set of size {n}")
    if x_mask & y_mask or x_mask | y_mask != full:
        raise ParameterError(
            f"x_mask {elements(x_mask)} and ordering {list(tau)} must partition 1..{n}"
        )


def _blue_bytes(c: ColoredLattice) -> bytes:
    return c.blue.to_bytes(max(1, (c.num_vertices + 7) // 8), "little")


def label_table(c: ColoredLattice, x_mask: int, tau: Sequence[int]) -> LabelTable:
    _check_partition(c, x_mask, tau)
    tau = tuple(tau)
    positions = list(iter_bits(x_mask))
    labels, parent, fail, floor = kernels.chain_lemma_labels(_blue_bytes(c), positions, _prefix_codes(tau))
    return LabelTable(x_mask, tau, tuple(labels), tuple(parent), fail, floor)


def _support_chain(table: LabelTable, index: int, length: int) -> list[int]:
    """First ``length`` vertices of the blue chain recorded for ``index``.

    The chain for X is the chain of its parent W followed by X u Y[i] for
    ``l_W <= i < l_X``; walking parents rebuilds it without storing lists.
    """
    prefix = _prefix_codes(table.tau)
    positions = list(iter_bits(table.x_mask))
    pieces: list[list[int]] = []
    s, top = index, length
    while True:
        w = table.parent[s]
        floor = table.labels[w] if w >= 0 else 0
        base = deposit(s, positions)
        pieces.append([base | prefix[i] for i in range(floor, top)])
        if w < 0 or floor == 0:
            break
        s, top = w, floor
    chain = [v for piece in reversed(pieces) for v in piece]
    return chain


def label_properties_hold(table: LabelTable, c: ColoredLattice) -> bool:
    """Monotone labels, blue support chains of matching length, red top vertices.

    Checked over every labelled subset; subsets never reached are skipped.
    """
    prefix = _prefix_codes(table.tau)
    positions = list(iter_bits(table.x_mask))
    n = len(positions)
    for s, lab in enumerate(table.labels):
        if lab < 0:
            continue
        for i in range(n):
            u = s & ~(1 << i)
            if u != s and table.labels[u] >= 0 and table.labels[u] > lab:
                return False
        base = deposit(s, positions)
        if c.is_blue(base | prefix[lab]):
            return False
        chain = table.support_chain(s)
        if len(chain) != lab:
            return False
        for j, z in enumerate(chain):
            if not c.is_blue(z) or z & ~(base | prefix[lab]) or z & ~table.x_mask != prefix[j]:
                return False
            if j and chain[j - 1] & ~z:
                return False
    return True


def run_chain_lemma(c: ColoredLattice, x_mask: int, tau: Sequence[int]) -> ChainLemmaResult:
    """Red copy of Q_|X| (as labels) or a blue Y-chain corresponding to ``tau``."""
    table = label_table(c, x_mask, tau)
    k = len(table.tau)
    if table.failed_at < 0:
        assert label_properties_hold(table, c), "label table violates its invariants"
        return RedCube(x_mask, table.tau, table.labels)
    s, floor = table.failed_at, table.failed_floor
    prefix = _prefix_codes(table.tau)
    base = deposit(s, list(iter_bits(x_mask)))
    tail = [base | prefix[i] for i in range(floor, k + 1)]
    w = table.parent[s]
    head = _support_chain(table, w, floor) if w >= 0 and floor > 0 else []
    return BlueChain(table.tau, tuple(head + tail))


def verify_certificate(res: ChainLemmaResult, c: ColoredLattice, x_mask: int, tau: Sequence[int]) -> bool:
    """Re-check a result against the coloring without trusting its construction."""
    tau = tuple(tau)
    try:
        _check_partition(c, x_mask, tau)
    except ParameterError:
        return False
    if isinstance(res, RedCube):
        if res.x_mask != x_mask or tuple(res.tau) != tau:
            return False
        n = x_mask.bit_count()
        if len(res.labels) != 1 << n or any(not 0 <= lab <= len(tau) for lab in res.labels):
            return False
        image = res.image()
        if len(set(image)) != len(image) or any(c.is_blue(v) for v in image):
            return False
        positions = list(iter_bits(x_mask))
        subsets = [deposit(s, positions) for s in range(1 << n)]
        for a, za in zip(subsets, image):
            for b, zb in zip(subsets, image):
                if (a & ~b == 0) != (za & ~zb == 0):
                    return False
        return True
    if isinstance(res, BlueChain):
        if tuple(res.tau) != tau or len(res.vertices) != len(tau) + 1:
            return False
        y_mask = code_of(tau)
        prefix = _prefix_codes(tau)
        prev_x = None
        for i, z in enumerate(res.vertices):
            if not 0 <= z < c.num_vertices or not c.is_blue(z):
                return False
            if z & y_mask != prefix[i]:
                return False
            x_part = z & ~y_mask
            if x_part & ~x_mask:
                return False
            if prev_x is not None and prev_x & ~x_part:
                return False
            prev_x = x_part
        return True
    return False


def chain_or_cube(c: ColoredLattice, n: int, k: int) -> ChainLemmaResult:
    """X = first ``n`` ground elements, tau = (n+1, ..., n+k)."""
    if n < 0 or k < 1 or c.n_ground != n + k:
        raise ParameterError(f"coloring has dimension {c.n_ground}, expected n+k = {n}+{k}")
    return run_chain_lemma(c, (1 << n) - 1, tuple(range(n + 1, n + k + 1)))


def result_from_json(obj: dict) -> ChainLemmaResult:
    kind = obj.get("kind")
    if kind == "red_cube":
        return RedCube(int(obj["x_mask"]), tuple(obj["tau"]), tuple(obj["labels"]))
    if kind == "blue_ychain":
        return BlueChain(tuple(obj["tau"]), tuple(obj["vertices"]))
    raise ParameterError(f"unknown certificate kind {kind!r}")


def result_to_json(res: ChainLemmaResult) -> str:
    return json.dumps(res.to_json_obj())
