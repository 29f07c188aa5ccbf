"""Subdivided diamonds from pairs of blue Y-chains that share endpoints.

For every ordering of Y the chain lemma yields a red cube or a blue
Y-chain.  Chains are grouped by their end vertices; inside a group, two
orderings that are not t-close produce two parallel windows of t+1 vertices
which, together with the shared ends, form a blue subdivided diamond.
"""

from __future__ import annotations

import itertools
import math
from collections import OrderedDict
from dataclasses import dataclass, field
from typing import Union

from .bits import code_of
from .chain_lemma import BlueChain, RedCube, run_chain_lemma
from .errors import BudgetError, NoWitnessError, ParameterError
from .lattice import ColoredLattice
from .permutations import COUNT_CAP, count_proper, first_far_index, relabel

__all__ = [
    "SdExtraction",
    "SdRedCube",
    "BlueSD",
    "Inconclusive",
    "SdSearchResult",
    "extract_sd",
    "sd_search",
    "SD_ORDERING_CAP",
]

SD_ORDERING_CAP = 8


def _subset(a: int, b: int) -> bool:
    return a & ~b == 0


@dataclass(frozen=True)
class SdExtraction:
    """The 2t+4 vertices taken from two chains at witness index ``index``."""

    vertices: tuple[int, ...]
    index: int
    bottom: int
    top: int
    sigma_window: tuple[int, ...]
    tau_window: tuple[int, ...]

    def to_json_obj(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "witness_index": self.index,
            "bottom": self.bottom,
            "top": self.top,
            "sigma_window": list(self.sigma_window),
            "tau_window": list(self.tau_window),
        }


def extract_sd(chain_sigma: BlueChain, chain_tau: BlueChain, t: int) -> SdExtraction:
    """Cut a subdivided diamond out of two Y-chains with common ends.

    Raises :class:`NoWitnessError` when ``chain_tau``'s ordering is t-close
    to ``chain_sigma``'s (after renaming sigma to 1..k).
    """
    if t < 1:
        raise ParameterError(f"t must be >= 1, got {t}")
    zs, zt = chain_sigma.vertices, chain_tau.vertices
    if len(zs) != len(zt) or sorted(chain_sigma.tau) != sorted(chain_tau.tau):
        raise ParameterError("chains belong to orderings of different sets")
    if zs[0] != zt[0] or zs[-1] != zt[-1]:
        raise ParameterError("chains do not share their bottom and top vertices")
    k = len(chain_sigma.tau)
    relabelled = relabel(chain_tau.tau, chain_sigma.tau)
    i = first_far_index(relabelled, t)
    if i is None:
        raise NoWitnessError(f"ordering {list(chain_tau.tau)} is {t}-close to {list(chain_sigma.tau)}")
    # A far index is always below k-t, so the window i..i+t stays inside 1..k-1.
    sigma_window = tuple(zs[i : i + t + 1])
    tau_window = tuple(zt[i : i + t + 1])
    for a in sigma_window:
        for b in tau_window:
            if _subset(a, b) or _subset(b, a):
                raise AssertionError(f"window vertices {a} and {b} are comparable")
    vertices = tuple(sorted({zs[0], zs[k], *sigma_window, *tau_window}))
    return SdExtraction(vertices, i, zs[0], zs[k], sigma_window, tau_window)


@dataclass(frozen=True)
class SdRedCube:
    ordering_rank: int
    cube: RedCube

    def to_json_obj(self) -> dict:
        return {"kind": "red_cube", "ordering_rank": self.ordering_rank, "certificate": self.cube.to_json_obj()}


@dataclass(frozen=True)
class BlueSD:
    extraction: SdExtraction
    sigma: tuple[int, ...]
    tau: tuple[int, ...]
    t: int

    @property
    def vertices(self) -> tuple[int, ...]:
        return self.extraction.vertices

    def to_json_obj(self) -> dict:
        return {
            "kind": "blue_sd",
            "t": self.t,
            "sigma": list(self.sigma),
            "tau": list(self.tau),
            **self.extraction.to_json_obj(),
        }


@dataclass(frozen=True)
class Inconclusive:
    """Every pair inside every endpoint class is t-close.

    ``proper_count`` is N(k, 2t+2) when k is within the enumeration cap; the
    counting argument says the largest class can be no larger than it.
    """

    orderings: int
    class_sizes: tuple[int, ...]
    all_t_close: bool
    proper_count: int | None
    extra: dict = field(default_factory=dict)

    @property
    def largest_class(self) -> int:
        return self.class_sizes[0] if self.class_sizes else 0

    def to_json_obj(self) -> dict:
        return {
            "kind": "inconclusive",
            "orderings": self.orderings,
            "endpoint_classes": len(self.class_sizes),
            "class_sizes": list(self.class_sizes),
            "largest_class": self.largest_class,
            "all_t_close": self.all_t_close,
            "proper_count_2t_plus_2": self.proper_count,
            "largest_within_proper_count": (
                None if self.proper_count is None else self.largest_class <= self.proper_count
            ),
            **self.extra,
        }


SdSearchResult = Union[SdRedCube, BlueSD, Inconclusive]


def _far_pair(members: list[BlueChain], t: int) -> tuple[BlueChain, BlueChain] | None:
    """A (sigma, tau) pair that is not t-close, preferring sigma = first member."""
    sigma = members[0]
    for other in members[1:]:
        if first_far_index(relabel(other.tau, sigma.tau), t) is not None:
            return sigma, other
    # t-closeness is not transitive, so a class can still hide a far pair.
    for a, b in itertools.combinations(members[1:], 2):
        if first_far_index(relabel(b.tau, a.tau), t) is not None:
            return a, b
    return None


def sd_search(c: ColoredLattice, n: int, k: int, t: int) -> SdSearchResult:
    """Run the chain lemma for every ordering of Y = {n+1..n+k} and look for a diamond."""
    if n < 0 or k < 1 or c.n_ground != n + k:
        raise ParameterError(f"coloring has dimension {c.n_ground}, expected n+k = {n}+{k}")
    if t < 1:
        raise ParameterError(f"t must be >= 1, got {t}")
    if k > SD_ORDERING_CAP:
        raise BudgetError(f"k={k} means {math.factorial(k)} orderings, above the cap k <= {SD_ORDERING_CAP}")
    x_mask = (1 << n) - 1
    classes: "OrderedDict[tuple[int, int], list[BlueChain]]" = OrderedDict()
    count = 0
    for rank, tau in enumerate(itertools.permutations(range(n + 1, n + k + 1))):
        res = run_chain_lemma(c, x_mask, tau)
        if isinstance(res, RedCube):
            return SdRedCube(rank, res)
        classes.setdefault((res.vertices[0], res.vertices[-1]), []).append(res)
        count += 1
    # Largest class first; ties keep discovery order (dicts are insertion ordered).
    ordered = sorted(classes.values(), key=len, reverse=True)
    for members in ordered:
        pair = _far_pair(members, t)
        if pair is not None:
            sigma, tau = pair
            return BlueSD(extract_sd(sigma, tau, t), sigma.tau, tau.tau, t)
    r = 2 * t + 2
    proper = count_proper(k, r) if k <= COUNT_CAP else None
    return Inconclusive(
        orderings=count,
        class_sizes=tuple(len(m) for m in ordered),
        all_t_close=True,
        proper_count=proper,
        extra={"y_mask": code_of(range(n + 1, n + k + 1))},
    )
