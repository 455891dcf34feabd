"""The sequence lambda_n = f(n) and the fixed-point moments m_n = 1/lambda_{n+1}.

The table is built by the forward recursion

    lambda_0 = 0,  lambda_{n+1} = (lambda_n + sqrt(lambda_n**2 + 4)) / 2,

whose summands are all positive, so no cancellation occurs.  Quantities
that would cancel when formed naively (lambda_n - lambda_{n-N}, the log of
the near-unit ratio lambda_{n+1}/lambda_n, lambda_{n+1}**2 - lambda_n**2)
are rewritten through the identity lambda_{n+1} - lambda_n = 1/lambda_{n+1}.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .precision import STANDARD, Arithmetic, get_arithmetic

NMAX_CAP = 2**24


class CapacityError(ValueError):
    """Requested depth exceeds the configured table size or memory cap."""


@dataclass(frozen=True, eq=False)
class LambdaTable:
    """Immutable prefix lambda_0..lambda_nmax.

    ``values`` is a read-only float64 array in standard precision and a
    tuple of mpmath ``mpf`` in extended precision.
    """

    values: np.ndarray | tuple
    arith: Arithmetic

    @property
    def nmax(self) -> int:
        return len(self.values) - 1

    @property
    def precision_digits(self) -> int:
        return self.arith.digits

    @property
    def precision(self) -> str:
        return self.arith.name

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, k: int):
        if not 0 <= k <= self.nmax:
            raise IndexError(f"lambda index {k} outside table range 0..{self.nmax}")
        v = self.values[k]
        return float(v) if isinstance(self.values, np.ndarray) else v

    def as_float_array(self) -> np.ndarray:
        if isinstance(self.values, np.ndarray):
            return self.values
        return np.array([float(v) for v in self.values])

    def require(self, k: int) -> None:
        """Raise CapacityError unless index ``k`` is inside the table."""
        if k > self.nmax:
            raise CapacityError(f"index {k} needs a table with nmax >= {k}, have {self.nmax}")


def build_lambda_table(nmax: int, precision: str | Arithmetic = STANDARD, *,
                       cap: int = NMAX_CAP) -> LambdaTable:
    if nmax < 0:
        raise ValueError("nmax must be non-negative")
    if nmax + 1 > cap:
        raise CapacityError(f"nmax={nmax} exceeds the table cap of {cap} entries")
    arith = get_arithmetic(precision)
    if arith.extended:
        ctx = arith.ctx
        four = ctx.mpf(4)
        x = ctx.mpf(0)
        vals = [x]
        for _ in range(nmax):
            x = (x + ctx.sqrt(x * x + four)) / 2
            vals.append(x)
        return LambdaTable(tuple(vals), arith)

    from math import sqrt
    vals = [0.0] * (nmax + 1)
    x = 0.0
    for k in range(1, nmax + 1):
        x = 0.5 * (x + sqrt(x * x + 4.0))
        vals[k] = x
    arr = np.array(vals, dtype=np.float64)
    arr.setflags(write=False)
    return LambdaTable(arr, arith)


def moment(table: LambdaTable, n: int):
    """m_n = 1/lambda_{n+1}."""
    if n < 0:
        raise IndexError("moment index must be non-negative")
    if n + 1 > table.nmax:
        raise IndexError(f"moment m_{n} needs lambda_{n + 1}; table stops at {table.nmax}")
    return 1 / table[n + 1]


def moments(table: LambdaTable, n: int) -> list:
    """The prefix m_0..m_n."""
    return [moment(table, k) for k in range(n + 1)]


def rho(table: LambdaTable, n: int, N: int):
    """rho_{n,N} = lambda_n - lambda_{n-N}, summed as sum_{k=1..N} 1/lambda_{n+1-k}."""
    if not 1 <= N <= n:
        raise IndexError(f"rho needs n >= N >= 1, got n={n}, N={N}")
    if n > table.nmax:
        raise IndexError(f"rho index n={n} beyond table nmax={table.nmax}")
    # smallest terms first
    return sum((1 / table[j] for j in range(n, n - N, -1)), table.arith.real(0))


def log_step(table: LambdaTable, n: int):
    """log(lambda_{n+1}/lambda_n) via log1p(1/(lambda_n * lambda_{n+1}))."""
    if not 1 <= n < table.nmax:
        raise IndexError(f"log_step needs 1 <= n < {table.nmax}, got {n}")
    return table.arith.log1p(1 / (table[n] * table[n + 1]))


def log_steps(table: LambdaTable, start: int, count: int) -> list:
    return [log_step(table, k) for k in range(start, start + count)]


def square_gap(table: LambdaTable, n: int):
    """lambda_{n+1}**2 - lambda_n**2, evaluated as 2 - 1/lambda_{n+1}**2."""
    if not 0 <= n < table.nmax:
        raise IndexError(f"square_gap needs 0 <= n < {table.nmax}, got {n}")
    x = table[n + 1]
    return 2 - 1 / (x * x)


def partial_sums(values: Sequence) -> list:
    """Running sums with Neumaier compensation for floats; plain sums otherwise."""
    out = []
    if values and not isinstance(values[0], (float, int, np.floating)):
        acc = values[0] * 0
        for v in values:
            acc = acc + v
            out.append(acc)
        return out
    s = 0.0
    c = 0.0
    for v in values:
        v = float(v)
        t = s + v
        if abs(s) >= abs(v):
            c += (s - t) + v
        else:
            c += (v - t) + s
        s = t
        out.append(s + c)
    return out
