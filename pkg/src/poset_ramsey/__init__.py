"""Verification workbench for poset Ramsey numbers R(P, Q_n).

The hot loops (chain-lemma labelling, DPLL, proper-permutation counting)
come from a compiled extension when available; ``kernels.BACKEND`` says
which implementation was picked.
"""

from .bounds import BoundReport, ramsey_bounds
from .chain_lemma import BlueChain, RedCube, run_chain_lemma, verify_certificate
from .errors import (
    BudgetError,
    ConstructionError,
    EncodingError,
    NoWitnessError,
    ParameterError,
    ParseError,
    PosetRamseyError,
    VerificationError,
)
from .estimate import CountingParameters, Verdict, verify_counting_estimate
from .expr import construct
from .kernels import BACKEND
from .lattice import Color, ColoredLattice
from .parser import parse_poset_expression
from .poset import Poset
from .ramsey import ArrowInstance, decide_arrow, exact_ramsey
from .sd import sd_search
from .witnesses import thm4_witness, thm5_witness, verify_witness

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "ArrowInstance",
    "BlueChain",
    "BoundReport",
    "BudgetError",
    "Color",
    "ColoredLattice",
    "ConstructionError",
    "CountingParameters",
    "EncodingError",
    "NoWitnessError",
    "ParameterError",
    "ParseError",
    "Poset",
    "PosetRamseyError",
    "RedCube",
    "Verdict",
    "VerificationError",
    "construct",
    "decide_arrow",
    "exact_ramsey",
    "parse_poset_expression",
    "ramsey_bounds",
    "run_chain_lemma",
    "sd_search",
    "thm4_witness",
    "thm5_witness",
    "verify_certificate",
    "verify_counting_estimate",
    "verify_witness",
]
