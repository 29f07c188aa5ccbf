"""Deciding "every coloring of Q_N has a blue P or a red Q_n" by SAT search.

Variable ``v + 1`` stands for vertex ``v`` of Q_N being blue.  Each copy of
P contributes the clause "some vertex is red" and each copy of Q_n the
clause "some vertex is blue"; the arrow holds iff the clauses are
unsatisfiable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from . import kernels
from .embedding import cube_host, enumerate_copies, find_monochromatic_copy
from .errors import BudgetError, ParameterError, VerificationError
from .lattice import Color, ColoredLattice
from .poset import Poset, boolean_cube

__all__ = [
    "ArrowInstance",
    "Holds",
    "Counterexample",
    "SearchOutcome",
    "arrow_clauses",
    "decide_arrow",
    "exact_ramsey",
    "export_cnf",
    "MAX_ARROW_DIMENSION",
]

MAX_ARROW_DIMENSION = 6


@dataclass(frozen=True)
class ArrowInstance:
    pattern: Poset
    n: int
    dim: int
    symmetry_break: bool = False

    def __post_init__(self):
        if self.n < 0 or self.dim < 0:
            raise ParameterError(f"n and N must be >= 0, got n={self.n}, N={self.dim}")


@dataclass(frozen=True)
class Holds:
    dim: int
    clauses: int

    def to_json_obj(self) -> dict:
        return {"outcome": "holds", "N": self.dim, "clauses": self.clauses}


@dataclass(frozen=True)
class Counterexample:
    coloring: ColoredLattice

    def to_json_obj(self) -> dict:
        return {"outcome": "counterexample", "N": self.coloring.n_ground, "coloring": self.coloring.to_json_obj()}


SearchOutcome = Union[Holds, Counterexample]


def arrow_clauses(inst: ArrowInstance) -> tuple[int, list[list[int]]]:
    """(number of variables, clauses); P-copy clauses first, then Q_n-copy clauses."""
    if inst.dim > MAX_ARROW_DIMENSION:
        raise BudgetError(f"N={inst.dim} exceeds the arrow-search cap {MAX_ARROW_DIMENSION}")
    host = cube_host(inst.dim)
    num_vars = host.size
    clauses: list[list[int]] = []
    for copy in enumerate_copies(inst.pattern, host):
        clauses.append([-(v + 1) for v in copy.vertices])
    for copy in enumerate_copies(boolean_cube(inst.n), host):
        clauses.append([v + 1 for v in copy.vertices])
    if inst.symmetry_break:
        clauses.extend(_singleton_order_clauses(inst.dim))
    return num_vars, clauses


def _singleton_order_clauses(dim: int) -> list[list[int]]:
    # Permuting the ground set preserves both families of copies, so we may
    # assume the singleton colors are sorted: {i+1} blue forces {i} blue.
    return [[-((1 << (i + 1)) + 1), (1 << i) + 1] for i in range(dim - 1)]


def decide_arrow(inst: ArrowInstance) -> SearchOutcome:
    num_vars, clauses = arrow_clauses(inst)
    model = kernels.dpll(num_vars, clauses)
    if model is None:
        return Holds(inst.dim, len(clauses))
    blue = 0
    for v in range(num_vars):
        if model[v + 1]:
            blue |= 1 << v
    coloring = ColoredLattice(inst.dim, blue)
    if find_monochromatic_copy(inst.pattern, coloring, Color.BLUE) is not None:
        raise VerificationError("solver model contains a blue copy of the pattern")
    if find_monochromatic_copy(boolean_cube(inst.n), coloring, Color.RED) is not None:
        raise VerificationError(f"solver model contains a red copy of Q_{inst.n}")
    return Counterexample(coloring)


def exact_ramsey(p: Poset, n: int, n_max: int = MAX_ARROW_DIMENSION, symmetry_break: bool = False) -> int:
    """Least N with the arrow property, scanning up from n + h(P) - 1."""
    if n_max > MAX_ARROW_DIMENSION:
        raise BudgetError(f"n_max={n_max} exceeds the arrow-search cap {MAX_ARROW_DIMENSION}")
    start = max(0, n + p.height - 1)
    last: Counterexample | None = None
    for dim in range(start, n_max + 1):
        outcome = decide_arrow(ArrowInstance(p, n, dim, symmetry_break))
        if isinstance(outcome, Holds):
            return dim
        last = outcome
    detail = f"; largest counterexample: {last.coloring.to_json()}" if last else ""
    raise BudgetError(f"no N in [{start}, {n_max}] satisfies the arrow relation{detail}")


def export_cnf(inst: ArrowInstance) -> str:
    """DIMACS text; UNSAT exactly when the arrow relation holds."""
    num_vars, clauses = arrow_clauses(inst)
    lines = [f"p cnf {num_vars} {len(clauses)}"]
    lines.extend(" ".join(map(str, clause)) + " 0" for clause in clauses)
    return "\n".join(lines) + "\n"
