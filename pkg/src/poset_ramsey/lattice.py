"""Blue/red colorings of Boolean lattices.

A vertex of Q_N is a subset code: an integer in ``[0, 2**N)`` whose bit
``i-1`` marks ground element ``i``.  Colors are packed into a single Python
int, bit ``v`` set meaning vertex ``v`` is blue.
"""

from __future__ import annotations

import enum
import itertools
import json
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import BudgetError, ParameterError

__all__ = [
    "Color",
    "ColoredLattice",
    "LayerSpec",
    "layered_coloring",
    "layer_mask",
    "MAX_DIMENSION",
]

MAX_DIMENSION = 24


class Color(enum.Enum):
    BLUE = "blue"
    RED = "red"

    @classmethod
    def parse(cls, value) -> "Color":
        if isinstance(value, Color):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ParameterError(f"color must be 'blue' or 'red', got {value!r}") from None


@lru_cache(maxsize=None)
def layer_mask(n: int, size: int) -> int:
    """Bitmask (over subset codes of Q_n) of the vertices in layer ``size``."""
    mask = 0
    for combo in itertools.combinations(range(n), size):
        mask |= 1 << sum(1 << i for i in combo)
    return mask


@dataclass(frozen=True)
class ColoredLattice:
    """Q_N with every vertex colored blue or red.

    ``blue`` is the packed color sequence: bit ``v`` is 1 iff vertex ``v`` is blue.
    """

    n_ground: int
    blue: int

    def __post_init__(self):
        if not 0 <= self.n_ground <= MAX_DIMENSION:
            raise BudgetError(f"lattice dimension {self.n_ground} outside 0..{MAX_DIMENSION}")
        if self.blue < 0 or self.blue >> (1 << self.n_ground):
            raise ParameterError("color bits beyond 2^N vertices")

    @property
    def num_vertices(self) -> int:
        return 1 << self.n_ground

    @property
    def full_mask(self) -> int:
        return (1 << self.num_vertices) - 1

    @property
    def red(self) -> int:
        return self.full_mask & ~self.blue

    def mask(self, color) -> int:
        return self.blue if Color.parse(color) is Color.BLUE else self.red

    def color(self, v: int) -> Color:
        return Color.BLUE if self.blue >> v & 1 else Color.RED

    def is_blue(self, v: int) -> bool:
        return bool(self.blue >> v & 1)

    def colors(self) -> list[Color]:
        return [self.color(v) for v in range(self.num_vertices)]

    def layered_blue_layers(self) -> frozenset[int] | None:
        """The blue layers if the coloring is layered, else None."""
        layers = set()
        for size in range(self.n_ground + 1):
            lm = layer_mask(self.n_ground, size)
            hit = self.blue & lm
            if hit == lm:
                layers.add(size)
            elif hit:
                return None
        return frozenset(layers)

    # -- construction helpers ---------------------------------------------

    @classmethod
    def from_colors(cls, n_ground: int, colors: Iterable) -> "ColoredLattice":
        colors = list(colors)
        if len(colors) != 1 << n_ground:
            raise ParameterError(f"expected {1 << n_ground} colors, got {len(colors)}")
        blue = 0
        for v, col in enumerate(colors):
            if Color.parse(col) is Color.BLUE:
                blue |= 1 << v
        return cls(n_ground, blue)

    @classmethod
    def monochromatic(cls, n_ground: int, color) -> "ColoredLattice":
        full = (1 << (1 << n_ground)) - 1
        return cls(n_ground, full if Color.parse(color) is Color.BLUE else 0)

    @classmethod
    def random(cls, n_ground: int, rng: random.Random | None = None) -> "ColoredLattice":
        rng = rng or random.Random()
        return cls(n_ground, rng.getrandbits(1 << n_ground))

    # -- serialization ----------------------------------------------------

    def to_json_obj(self) -> dict:
        nbytes = max(1, (self.num_vertices + 7) // 8)
        return {"n_ground": self.n_ground, "blue_bits": self.blue.to_bytes(nbytes, "little").hex()}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: dict) -> "ColoredLattice":
        try:
            n = int(obj["n_ground"])
            raw = bytes.fromhex(obj["blue_bits"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParameterError(f"malformed coloring document: {exc}") from None
        if not 0 <= n <= MAX_DIMENSION:
            raise BudgetError(f"lattice dimension {n} outside 0..{MAX_DIMENSION}")
        expected = max(1, ((1 << n) + 7) // 8)
        if len(raw) != expected:
            raise ParameterError(f"blue_bits must hold {expected} bytes for N={n}, got {len(raw)}")
        blue = int.from_bytes(raw, "little")
        if blue >> (1 << n):
            raise ParameterError("padding bits of blue_bits must be zero")
        return cls(n, blue)

    @classmethod
    def from_json(cls, text: str) -> "ColoredLattice":
        return cls.from_json_obj(json.loads(text))


@dataclass(frozen=True)
class LayerSpec:
    n: int
    blue_layers: frozenset[int]

    def __post_init__(self):
        layers = frozenset(self.blue_layers)
        object.__setattr__(self, "blue_layers", layers)
        if any(not 0 <= l <= self.n for l in layers):
            raise ParameterError(f"blue layers {sorted(layers)} not within 0..{self.n}")


def layered_coloring(spec: LayerSpec) -> ColoredLattice:
    """Vertex Z is blue iff |Z| is one of ``spec.blue_layers``."""
    blue = 0
    for size in spec.blue_layers:
        blue |= layer_mask(spec.n, size)
    return ColoredLattice(spec.n, blue)
