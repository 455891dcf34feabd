"""Arithmetic backends: binary64 floats or mpmath at a fixed number of digits."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Any

import mpmath

STANDARD = "standard"
EXTENDED = "extended"
EXTENDED_DIGITS = 32


@dataclass(frozen=True)
class Arithmetic:
    """Scalar operations for one precision mode.

    ``standard`` works on Python ``float``/``complex``; ``extended`` on the
    ``mpf``/``mpc`` types of a private mpmath context, so the global
    ``mpmath.mp`` precision is never touched.
    """

    name: str
    digits: int
    ctx: Any = field(default=None, repr=False, compare=False)

    @property
    def extended(self) -> bool:
        return self.ctx is not None

    def real(self, x):
        return self.ctx.mpf(x) if self.ctx is not None else float(x)

    def complex(self, z):
        if self.ctx is not None:
            z = complex(z) if not isinstance(z, self.ctx.mpc) else z
            return self.ctx.mpc(z)
        return complex(z)

    def sqrt(self, x):
        return self.ctx.sqrt(x) if self.ctx is not None else math.sqrt(x)

    def log(self, x):
        return self.ctx.log(x) if self.ctx is not None else math.log(x)

    def log1p(self, x):
        return self.ctx.log1p(x) if self.ctx is not None else math.log1p(x)

    def exp(self, x):
        if self.ctx is not None:
            return self.ctx.exp(x)
        if isinstance(x, complex):
            return cmath.exp(x)
        return math.exp(x)

    def format(self, x) -> str:
        """Shortest round-trip text for floats, all working digits otherwise."""
        if self.ctx is not None:
            if x == 0:
                return "0"
            text = self.ctx.nstr(x, self.digits, min_fixed=-math.inf, max_fixed=math.inf)
            return text[:-2] if text.endswith(".0") else text
        return format_float(x)


def format_float(x: float) -> str:
    x = float(x)
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    text = repr(x)
    if text.endswith(".0"):
        text = text[:-2]
    if text == "-0":
        text = "0"
    return text


def get_arithmetic(precision: str | Arithmetic = STANDARD, digits: int | None = None) -> Arithmetic:
    if isinstance(precision, Arithmetic):
        return precision
    if precision == STANDARD:
        return Arithmetic(STANDARD, 15)
    if precision == EXTENDED:
        ctx = mpmath.MPContext()
        ctx.dps = digits or EXTENDED_DIGITS
        return Arithmetic(EXTENDED, ctx.dps, ctx)
    raise ValueError(f"unknown precision mode {precision!r}; use 'standard' or 'extended'")
