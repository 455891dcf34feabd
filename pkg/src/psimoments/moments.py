"""The transform T(a)_n = 1/(a_0 + ... + a_n) and Hausdorff-moment diagnostics."""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .sequences import CapacityError, LambdaTable, moment, partial_sums


class PartialSumError(ZeroDivisionError):
    """A partial sum a_0 + ... + a_index vanished."""

    def __init__(self, index: int):
        super().__init__(f"partial sum a_0 + ... + a_{index} is zero")
        self.index = index


@dataclass(frozen=True)
class MomentSeq:
    """Finite prefix a_0..a_n of a candidate moment sequence."""

    values: tuple

    def __init__(self, values: Sequence):
        object.__setattr__(self, "values", tuple(values))

    @property
    def normalized(self) -> bool:
        return bool(self.values) and self.values[0] == 1

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, k):
        return self.values[k]

    def __iter__(self):
        return iter(self.values)


def fixed_point(table: LambdaTable, n: int) -> MomentSeq:
    """The fixed point prefix (m_0, ..., m_n) from the lambda table."""
    return MomentSeq(moment(table, k) for k in range(n + 1))


def transform_T(seq: MomentSeq) -> MomentSeq:
    sums = partial_sums(list(seq.values))
    out = []
    for k, s in enumerate(sums):
        if s == 0:
            raise PartialSumError(k)
        out.append(1 / s)
    return MomentSeq(out)


def iterate_T(seq: MomentSeq, k: int) -> MomentSeq:
    if k < 0:
        raise ValueError("iteration count must be non-negative")
    for _ in range(k):
        seq = transform_T(seq)
    return seq


@dataclass(frozen=True)
class DiffTable:
    """rows[k][n] = (-1)**k Delta**k a_n."""

    rows: tuple

    @property
    def depth(self) -> int:
        return len(self.rows) - 1


def difference_table(seq: MomentSeq, depth: int) -> DiffTable:
    if depth + 1 > len(seq):
        raise ValueError(f"depth {depth} needs at least {depth + 1} terms, have {len(seq)}")
    row = list(seq.values)
    rows = [tuple(row)]
    for _ in range(depth):
        # (-1)^{k+1} Delta^{k+1} a_n = r_n - r_{n+1} with r the previous signed row
        row = [row[j] - row[j + 1] for j in range(len(row) - 1)]
        rows.append(tuple(row))
    return DiffTable(tuple(rows))


class MonotoneCheck(NamedTuple):
    passed: bool
    worst: float
    at: tuple


def completely_monotone_check(seq: MomentSeq, depth: int, tol: float) -> MonotoneCheck:
    """Hausdorff criterion on a prefix: every signed difference must be >= -tol."""
    table = difference_table(seq, depth)
    worst, at = None, (0, 0)
    for k, row in enumerate(table.rows):
        for n, v in enumerate(row):
            if worst is None or v < worst:
                worst, at = v, (k, n)
    return MonotoneCheck(bool(worst >= -tol), float(worst), at)


def fixed_point_residual(table: LambdaTable, n_check: int) -> float:
    """max_{n <= n_check} |m_n (1 + m_1 + ... + m_n) - 1|."""
    if n_check + 1 > table.nmax:
        raise CapacityError(f"n_check={n_check} needs lambda up to {n_check + 1}, have {table.nmax}")
    m = [moment(table, k) for k in range(n_check + 1)]
    sums = partial_sums(m)
    return float(max(abs(mk * s - 1) for mk, s in zip(m, sums)))
