"""Invariant suites behind ``psimoments verify``.

Each suite returns a list of :class:`Check` rows carrying the measured
worst-case quantity next to its limit.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dynamics import DiscCert, check_disc_step, phi, psi_iter
from .evaluator import (EvalConfig, bracket_f, error_bound_step1, eval_F, eval_f,
                        shift_identity_check)
from .moments import completely_monotone_check, fixed_point, fixed_point_residual, transform_T
from .sequences import build_lambda_table, log_step, moment, square_gap

SUITES = ("sequences", "dynamics", "evaluator", "moments")


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    measured: float
    limit: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.name:<44} measured={self.measured:.3e}  limit={self.limit:.3e}"


def _le(name, measured, limit) -> Check:
    return Check(name, bool(measured <= limit), float(measured), float(limit))


def sequences_suite(table, seed: int = 0) -> list[Check]:
    lam = table.as_float_array()
    k = np.arange(len(lam), dtype=float)
    # margin > 0 means the bound holds
    lower = float(np.min(lam - np.sqrt(k)))
    upper = float(np.min(np.sqrt(2 * k) - lam))
    ratios = lam[2:] / lam[1:-1]
    n = table.nmax - 1
    steps = [float(log_step(table, j)) for j in range(1, min(n, 2000))]
    return [
        _le("growth: sqrt(n) <= lambda_n (violation)", max(0.0, -lower), 0.0),
        _le("growth: lambda_n <= sqrt(2n) (violation)", max(0.0, -upper), 0.0),
        _le("monotone: ratio strictly decreasing (viol.)", float(max(0.0, np.max(np.diff(ratios)))), 0.0),
        _le("monotone: log_step strictly decreasing (viol.)", max(0.0, max(np.diff(steps))), 0.0),
        _le("square gap: |lambda^2 gap - 2| at nmax-1", abs(float(square_gap(table, n)) - 2), 1e-3),
        _le("asymptotic: |lambda_n^2/n - 2| at nmax", abs(lam[-1] ** 2 / table.nmax - 2), 1e-3),
        _le("fixed point residual n<=1000", fixed_point_residual(table, min(1000, table.nmax - 1)), 1e-11),
    ]


def dynamics_suite(table, seed: int = 0) -> list[Check]:
    checks = []
    xs = np.linspace(-1e3, 1e3, 2001)
    inv = max(abs((y := phi(float(x))) - 1 / y - x) / max(1.0, abs(x)) for x in xs)
    checks.append(_le("psi(phi(x)) = x on [-1e3, 1e3], per max(1,|x|)", inv, 1e-13))
    orbit = max(abs(complex(psi_iter(table[n], n).value)) / n for n in range(1, 51))
    checks.append(_le("psi^n(lambda_n) = 0, scaled by n", orbit, 1e-10))
    failures = 0
    count = 0
    for n in range(2, min(table.nmax, 201)):
        for N in range(1, min(n // 2, 20) + 1):
            for c in (0.25, 0.5, 1.0):
                cert = DiscCert.build(table, n, N, c)
                count += 1
                failures += not check_disc_step(cert, table, 200, seed + count)
    checks.append(_le(f"disc containment failures ({count} certs)", failures, 0))
    return checks


def evaluator_suite(table, seed: int = 0) -> list[Check]:
    cfg = EvalConfig(n_max=min(2**14, table.nmax // 2))
    gold = max(abs(complex(eval_f(n, cfg, table).value) - table[n]) / table[n] for n in range(1, 21))
    duality = max(abs(complex(eval_F(n, cfg, table).value) - moment(table, n)) / moment(table, n)
                  for n in range(0, 21))
    rng = np.random.default_rng(seed)
    pts = rng.uniform(-0.5, 4, 25) + 1j * rng.uniform(-3, 3, 25)
    shift = max(r.residual for z in pts if not (r := shift_identity_check(z, cfg, table)).flags)
    excess = 0.0
    for s in rng.uniform(0, 1, 20):
        s = 1 - s  # (0, 1]
        for n in (16, 64, 256, 1024):
            lo, hi = bracket_f(s, n, table)
            excess = max(excess, lo - hi, (hi - lo) - error_bound_step1(s, n, table))
    return [
        _le("f(n) = lambda_n, n<=20 (relative)", gold, 1e-9),
        _le("F(n) = m_n, n<=20 (relative)", duality, 1e-9),
        _le("|f(z) - psi(f(z+1))| on samples", shift, 1e-8),
        _le("bracket ordered and within step bound", max(excess, 0.0), 0.0),
    ]


def moments_suite(table, seed: int = 0) -> list[Check]:
    n = min(500, table.nmax - 1)
    fp = fixed_point(table, n)
    image = transform_T(fp)
    rel = max(abs(a - b) / b for a, b in zip(image, fp))
    cm = completely_monotone_check(fixed_point(table, 25), 12, 1e-8)
    return [
        _le("T(m) = m on m_0..m_500 (relative)", rel, 1e-11),
        _le("complete monotonicity depth 12 (neg. part)", max(0.0, -cm.worst), 1e-8),
    ]


def run(suite: str = "all", seed: int = 0, table=None) -> list[Check]:
    names = SUITES if suite == "all" else (suite,)
    if any(s not in SUITES for s in names):
        raise ValueError(f"unknown suite {suite!r}")
    table = table if table is not None else build_lambda_table(2**15 + 64)
    fns = {"sequences": sequences_suite, "dynamics": dynamics_suite,
           "evaluator": evaluator_suite, "moments": moments_suite}
    out = []
    for name in names:
        out.extend(fns[name](table, seed))
    return out
