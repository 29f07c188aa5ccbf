"""Poset expressions: a small AST over the named constructions.

Every node has ``to_text()`` producing the surface syntax understood by
:func:`poset_ramsey.parser.parse_poset_expression`, and :func:`construct`
turns a node into a :class:`~poset_ramsey.poset.Poset`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from . import poset as P
from .errors import ConstructionError

__all__ = [
    "Chain",
    "Antichain",
    "ParallelCompose",
    "ChainComposition",
    "Multipartite",
    "SubdividedDiamond",
    "BooleanCube",
    "Glue",
    "Named",
    "PosetExpression",
    "construct",
    "normalize",
]


def _check_positive(name: str, *values: int) -> None:
    for v in values:
        if not isinstance(v, int) or v < 1:
            raise ConstructionError(f"{name}: parameters must be positive integers, got {v!r}")


@dataclass(frozen=True)
class Chain:
    t: int

    def __post_init__(self):
        _check_positive("C", self.t)

    def to_text(self) -> str:
        return f"C({self.t})"


@dataclass(frozen=True)
class Antichain:
    l: int

    def __post_init__(self):
        _check_positive("A", self.l)

    def to_text(self) -> str:
        return f"A({self.l})"


@dataclass(frozen=True)
class ParallelCompose:
    left: "PosetExpression"
    right: "PosetExpression"

    def to_text(self) -> str:
        # The grammar has no parentheses; only left-nested sums (as produced by
        # normalize) read back to the same tree.
        return f"{self.left.to_text()}+{self.right.to_text()}"


@dataclass(frozen=True)
class ChainComposition:
    parts: tuple[int, ...]

    def __post_init__(self):
        if not self.parts:
            raise ConstructionError("CC: needs at least one chain")
        _check_positive("CC", *self.parts)
        object.__setattr__(self, "parts", tuple(sorted(self.parts, reverse=True)))

    def to_text(self) -> str:
        return f"CC({','.join(map(str, self.parts))})"


@dataclass(frozen=True)
class Multipartite:
    parts: tuple[int, ...]

    def __post_init__(self):
        if not self.parts:
            raise ConstructionError("K: needs at least one layer")
        _check_positive("K", *self.parts)
        object.__setattr__(self, "parts", tuple(self.parts))

    def to_text(self) -> str:
        return f"K({','.join(map(str, self.parts))})"


@dataclass(frozen=True)
class SubdividedDiamond:
    s: int
    t: int

    def __post_init__(self):
        _check_positive("SD", self.s, self.t)

    def to_text(self) -> str:
        return f"SD({self.s},{self.t})"


@dataclass(frozen=True)
class BooleanCube:
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise ConstructionError(f"Q: dimension must be a non-negative integer, got {self.n!r}")

    def to_text(self) -> str:
        return f"Q({self.n})"


@dataclass(frozen=True)
class Glue:
    left: "PosetExpression"
    right: "PosetExpression"

    def to_text(self) -> str:
        return f"glue({self.left.to_text()},{self.right.to_text()})"


@dataclass(frozen=True)
class Named:
    name: str

    def __post_init__(self):
        if self.name not in P.NAMED:
            raise ConstructionError(f"unknown named poset {self.name!r}")

    def to_text(self) -> str:
        return self.name


PosetExpression = Union[
    Chain, Antichain, ParallelCompose, ChainComposition, Multipartite,
    SubdividedDiamond, BooleanCube, Glue, Named,
]


def _sum_terms(expr) -> list:
    if isinstance(expr, ParallelCompose):
        return _sum_terms(expr.left) + _sum_terms(expr.right)
    return [expr]


def normalize(expr):
    """Canonical form used by the parser.

    Sums of chain-like terms (antichains count as parallel single chains) collapse
    into one :class:`ChainComposition` with non-increasing parameters; other
    sums are re-associated to the left.
    """
    if isinstance(expr, Glue):
        return Glue(normalize(expr.left), normalize(expr.right))
    if not isinstance(expr, ParallelCompose):
        return expr
    terms = [normalize(t) for t in _sum_terms(expr)]
    flat = []
    for t in terms:
        flat.extend(_sum_terms(t))
    if all(isinstance(t, (Chain, Antichain, ChainComposition)) for t in flat):
        parts: list[int] = []
        for t in flat:
            if isinstance(t, Chain):
                parts.append(t.t)
            elif isinstance(t, Antichain):
                parts.extend([1] * t.l)
            else:
                parts.extend(t.parts)
        return ChainComposition(tuple(parts))
    out = flat[0]
    for t in flat[1:]:
        out = ParallelCompose(out, t)
    return out


def construct(expr) -> P.Poset:
    """Build the poset denoted by ``expr``."""
    if isinstance(expr, Chain):
        return P.chain(expr.t)
    if isinstance(expr, Antichain):
        return P.antichain(expr.l)
    if isinstance(expr, ParallelCompose):
        return P.parallel(construct(expr.left), construct(expr.right))
    if isinstance(expr, ChainComposition):
        return P.chain_composition(*expr.parts)
    if isinstance(expr, Multipartite):
        return P.multipartite(*expr.parts)
    if isinstance(expr, SubdividedDiamond):
        return P.subdivided_diamond(expr.s, expr.t)
    if isinstance(expr, BooleanCube):
        return P.boolean_cube(expr.n)
    if isinstance(expr, Glue):
        return P.glue(construct(expr.left), construct(expr.right))
    if isinstance(expr, Named):
        return P.named(expr.name)
    raise ConstructionError(f"not a poset expression: {expr!r}")
