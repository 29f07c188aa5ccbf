"""Rigorous check of the factorial-versus-exponential counting inequality.

For given n and c we set

    eps = 3 (log2 log2 n + log2 e + c + 2) / log2 n,   k = floor((2 + eps) n / log2 n)

and ask whether k! > 2^(c k) * 2^(2 (n + k)), i.e. log2 k! > c k + 2 (n + k).
Everything is evaluated in interval arithmetic with outward rounding, so a
HOLDS verdict is a proof and FAILS is a disproof; anything the intervals
cannot separate is INDETERMINATE.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from mpmath import libmp
from mpmath.ctx_iv import MPIntervalContext

from .errors import ParameterError

__all__ = [
    "Verdict",
    "CountingParameters",
    "CountingReport",
    "verify_counting_estimate",
    "counting_report",
    "log2_factorial_interval",
    "doubling_scan",
    "EXACT_FACTORIAL_LIMIT",
]

# Below this k the factorial is formed exactly and its log bracketed from its
# leading bits; above it Robbins' two-sided Stirling bounds take over.
EXACT_FACTORIAL_LIMIT = 100_000
_LEADING_BITS = 100
_PREC = 192


class Verdict(str, enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    INDETERMINATE = "indeterminate"


def _ctx() -> MPIntervalContext:
    ctx = MPIntervalContext()
    ctx.prec = _PREC
    return ctx


def _lo(x) -> Any:
    return x._mpi_[0]


def _hi(x) -> Any:
    return x._mpi_[1]


def _hull(ctx, lo_iv, hi_iv):
    """Interval from the lower end of ``lo_iv`` to the upper end of ``hi_iv``."""
    out = ctx.mpf(0)
    out._mpi_ = (_lo(lo_iv), _hi(hi_iv))
    return out


def log2_factorial_interval(k: int, ctx: MPIntervalContext | None = None):
    """An interval guaranteed to contain log2(k!)."""
    ctx = ctx or _ctx()
    if k < 0:
        raise ParameterError(f"k must be >= 0, got {k}")
    if k <= 1:
        return ctx.mpf(0)
    if k <= EXACT_FACTORIAL_LIMIT:
        f = math.factorial(k)
        shift = max(0, f.bit_length() - _LEADING_BITS)
        top = f >> shift
        lower = ctx.log(ctx.mpf(top), 2) + shift
        upper = ctx.log(ctx.mpf(top + 1), 2) + shift if shift else lower
        return _hull(ctx, lower, upper)
    kk = ctx.mpf(k)
    base = kk * ctx.log(kk) - kk + ctx.log(2 * ctx.pi * kk) / 2
    lower = (base + 1 / (12 * kk + 1)) / ctx.log(2)
    upper = (base + 1 / (12 * kk)) / ctx.log(2)
    return _hull(ctx, lower, upper)


def _to_interval(ctx, value):
    if isinstance(value, Fraction):
        return ctx.mpf(value.numerator) / value.denominator
    if isinstance(value, (int, float, str)):
        return ctx.mpf(value)
    if hasattr(value, "_mpi_"):
        out = ctx.mpf(0)
        out._mpi_ = value._mpi_
        return out
    raise ParameterError(f"cannot read {value!r} as a real constant")


@dataclass(frozen=True)
class CountingParameters:
    """Inputs of the estimate.

    ``c`` is a positive constant given either as a number (floats are exact
    binary values), a decimal string (enclosed outward), or ``log2_of`` can
    add an exact ``log2(log2_of)`` term.  ``k`` overrides the derived value.
    """

    n: int
    c: Any
    log2_of: int = 0
    k: int | None = None

    def __post_init__(self):
        if self.n < 2:
            raise ParameterError(f"n must be >= 2, got {self.n}")
        if self.log2_of < 0:
            raise ParameterError("log2_of must be >= 0")
        if self.k is not None and self.k < 0:
            raise ParameterError(f"k must be >= 0, got {self.k}")

    @classmethod
    def for_diamond(cls, n: int, t: int) -> "CountingParameters":
        """c = 2t + 2 + log2(2t + 2), the constant used for SD_{t,t}."""
        return cls(n, 2 * t + 2, log2_of=2 * t + 2)

    def c_interval(self, ctx):
        c = _to_interval(ctx, self.c)
        if self.log2_of:
            c = c + ctx.log(ctx.mpf(self.log2_of), 2)
        if not libmp.mpf_gt(_lo(c), libmp.fzero):
            raise ParameterError("c must be positive")
        return c

    def epsilon(self, ctx):
        log_n = ctx.log(ctx.mpf(self.n), 2)
        return 3 * (ctx.log(log_n, 2) + ctx.log(ctx.e, 2) + self.c_interval(ctx) + 2) / log_n

    def k_interval(self, ctx):
        log_n = ctx.log(ctx.mpf(self.n), 2)
        return (2 + self.epsilon(ctx)) * self.n / log_n

    def k_candidates(self, ctx=None) -> list[int]:
        """Possible values of floor(k); more than one only if the enclosure straddles an integer."""
        if self.k is not None:
            return [self.k]
        ctx = ctx or _ctx()
        kk = self.k_interval(ctx)
        lo = libmp.to_int(_lo(kk), libmp.round_floor)
        hi = libmp.to_int(_hi(kk), libmp.round_floor)
        return list(range(lo, hi + 1))


@dataclass(frozen=True)
class CountingReport:
    verdict: Verdict
    n: int
    k_values: tuple[int, ...]
    per_k: tuple[tuple[int, Verdict, str, str], ...] = field(default=())

    def to_json_obj(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "n": self.n,
            "k": list(self.k_values),
            "evaluations": [
                {"k": k, "verdict": v.value, "log2_k_factorial": lhs, "rhs": rhs} for k, v, lhs, rhs in self.per_k
            ],
        }


def _single(ctx, params: CountingParameters, k: int) -> tuple[Verdict, str, str]:
    lhs = log2_factorial_interval(k, ctx)
    rhs = params.c_interval(ctx) * k + 2 * (params.n + k)
    if libmp.mpf_gt(_lo(lhs), _hi(rhs)):
        verdict = Verdict.HOLDS
    elif libmp.mpf_lt(_hi(lhs), _lo(rhs)):
        verdict = Verdict.FAILS
    else:
        verdict = Verdict.INDETERMINATE
    return verdict, ctx.nstr(lhs, 20), ctx.nstr(rhs, 20)


def counting_report(params: CountingParameters) -> CountingReport:
    ctx = _ctx()
    ks = params.k_candidates(ctx)
    rows = tuple((k, *_single(ctx, params, k)) for k in ks)
    verdicts = {row[1] for row in rows}
    if verdicts == {Verdict.HOLDS}:
        overall = Verdict.HOLDS
    elif verdicts == {Verdict.FAILS}:
        overall = Verdict.FAILS
    else:
        overall = Verdict.INDETERMINATE
    return CountingReport(overall, params.n, tuple(ks), rows)


def verify_counting_estimate(params: CountingParameters) -> Verdict:
    return counting_report(params).verdict


def doubling_scan(
    c: Any = 0, log2_of: int = 0, start_exponent: int = 1, stop_exponent: int = 64
) -> list[tuple[int, Verdict]]:
    """Verdicts at n = 2^e for e in [start_exponent, stop_exponent]."""
    return [
        (e, verify_counting_estimate(CountingParameters(1 << e, c, log2_of=log2_of)))
        for e in range(max(1, start_exponent), stop_exponent + 1)
    ]
