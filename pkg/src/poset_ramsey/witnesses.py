"""Layered lower-bound colorings for chain compositions and their verification.

``thm4_witness(n, t1)`` colors Q_{n+t1} so that neither a blue
C_{t1,t2} (any t2 <= t1) nor a red Q_n appears, showing R(C_{t1,t2}, Q_n) > n+t1.
``thm5_witness(n, t, t')`` does the same for C_{t,t-1,t'} in Q_{n+t+1}.
"""

from __future__ import annotations

from dataclasses import dataclass

from .embedding import find_monochromatic_copy
from .errors import ParameterError
from .lattice import Color, ColoredLattice, LayerSpec, layered_coloring
from .poset import Poset, boolean_cube

__all__ = [
    "thm4_witness",
    "thm5_witness",
    "thm4_layers",
    "thm5_layers",
    "WitnessReport",
    "verify_witness",
]


def thm4_layers(n: int, t1: int) -> tuple[int, frozenset[int]]:
    """Dimension and blue layers of the two-chain witness.

    Both one-element layers are blue, plus layers ``1..t1-1``; the remaining
    ``n`` layers are red.
    """
    if n < 1 or t1 < 1:
        raise ParameterError(f"need n >= 1 and t1 >= 1, got n={n}, t1={t1}")
    dim = n + t1
    return dim, frozenset({0, dim} | set(range(1, t1)))


def thm4_witness(n: int, t1: int) -> ColoredLattice:
    dim, blue = thm4_layers(n, t1)
    return layered_coloring(LayerSpec(dim, blue))


def thm5_layers(n: int, t: int, t_prime: int) -> tuple[int, frozenset[int]]:
    """Dimension and blue layers of the three-chain witness.

    Layers ``0, 1, dim-1, dim`` are blue, plus ``2..t-1``; ``n`` layers stay red.
    """
    if n < 1:
        raise ParameterError(f"need n >= 1, got {n}")
    if not t >= t_prime + 1 >= 2:
        raise ParameterError(f"need t >= t' + 1 >= 2, got t={t}, t'={t_prime}")
    dim = n + t + 1
    return dim, frozenset({0, 1, dim - 1, dim} | set(range(2, t)))


def thm5_witness(n: int, t: int, t_prime: int) -> ColoredLattice:
    dim, blue = thm5_layers(n, t, t_prime)
    return layered_coloring(LayerSpec(dim, blue))


@dataclass(frozen=True)
class WitnessReport:
    has_blue_copy_of_p: bool
    has_red_copy_of_qn: bool
    blue_copy: tuple[int, ...] | None = None
    red_copy: tuple[int, ...] | None = None

    @property
    def valid(self) -> bool:
        return not (self.has_blue_copy_of_p or self.has_red_copy_of_qn)

    def to_json_obj(self) -> dict:
        return {
            "has_blue_copy_of_p": self.has_blue_copy_of_p,
            "has_red_copy_of_qn": self.has_red_copy_of_qn,
            "blue_copy": list(self.blue_copy) if self.blue_copy else None,
            "red_copy": list(self.red_copy) if self.red_copy else None,
            "valid": self.valid,
        }


def verify_witness(c: ColoredLattice, p: Poset, n: int) -> WitnessReport:
    """Search ``c`` for a blue copy of ``p`` and a red copy of Q_n."""
    blue = find_monochromatic_copy(p, c, Color.BLUE)
    red = find_monochromatic_copy(boolean_cube(n), c, Color.RED)
    return WitnessReport(
        has_blue_copy_of_p=blue is not None,
        has_red_copy_of_qn=red is not None,
        blue_copy=blue.vertices if blue else None,
        red_copy=red.vertices if red else None,
    )
