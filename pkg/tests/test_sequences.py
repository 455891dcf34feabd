import math

import mpmath
import numpy as np
import pytest

from psimoments import CapacityError, build_lambda_table, log_step, moment, moments, rho
from psimoments.sequences import partial_sums, square_gap

SQRT5 = math.sqrt(5)
# closed forms evaluated at 50 digits (tests/oracles/generate.py)
LAMBDA_3_TEXT = "2.09529398522391449274681671887"
LAMBDA_3 = float(LAMBDA_3_TEXT)
M_2 = 0.477259996474019644542229884501
LOG_LAMBDA_2 = 0.481211825059603447497758913424
LAMBDA_MILLION = 1414.210708388430330942741


def test_empty_prefix():
    t = build_lambda_table(0)
    assert list(t.values) == [0.0]
    assert t.nmax == 0


def test_first_values():
    t = build_lambda_table(3)
    assert t[0] == 0.0
    assert t[1] == 1.0
    assert t[2] == pytest.approx((1 + SQRT5) / 2, rel=1e-16)
    assert t[2] == pytest.approx(1.618033988749895, rel=1e-15)
    assert t[3] == pytest.approx(LAMBDA_3, rel=1e-15)


def test_lambda_3_closed_form_is_consistent():
    with mpmath.workdps(40):
        s5 = mpmath.sqrt(5)
        closed = (mpmath.sqrt(22 + 2 * s5) + s5 + 1) / 4
        assert abs(closed - mpmath.mpf(LAMBDA_3_TEXT)) < 1e-28


def test_table_is_read_only(table):
    with pytest.raises(ValueError):
        table.values[3] = 1.0


@pytest.mark.parametrize("n, expected", [
    (0, 1.0),
    (1, (-1 + SQRT5) / 2),
    (2, M_2),
])
def test_moment_values(table, n, expected):
    assert moment(table, n) == pytest.approx(expected, rel=1e-15)


def test_moment_out_of_range():
    t = build_lambda_table(5)
    assert moment(t, 4) == 1 / t[5]
    with pytest.raises(IndexError):
        moment(t, 5)


def test_rho_edge_cases(table):
    for N in (1, 2, 7, 40):
        assert rho(table, N, N) == pytest.approx(table[N], rel=1e-14)
    for n in (1, 5, 1000):
        assert rho(table, n, 1) == pytest.approx(1 / table[n], rel=1e-15)
    assert table[2] == pytest.approx(1 / table[1] + 1 / table[2], rel=1e-15)
    assert rho(table, 2, 2) == pytest.approx(table[2], rel=1e-15)


@pytest.mark.parametrize("n, N", [(10, 3), (100, 50), (5000, 20), (30000, 1000)])
def test_rho_sum_matches_difference(table, n, N):
    assert rho(table, n, N) == pytest.approx(table[n] - table[n - N], rel=1e-12)


@pytest.mark.parametrize("n, N", [(3, 0), (3, 4), (10**6, 1)])
def test_rho_index_errors(table, n, N):
    with pytest.raises(IndexError):
        rho(table, n, N)


def test_log_step_small_n(table):
    assert log_step(table, 1) == pytest.approx(LOG_LAMBDA_2, rel=1e-15)
    for n in range(1, 50):
        assert log_step(table, n) == pytest.approx(math.log(table[n + 1] / table[n]), rel=1e-13)


def test_log_step_large_n(million_table):
    n = 10**6
    v = log_step(million_table, n)
    assert 0 < v <= 1 / (million_table[n] * million_table[n + 1])
    assert abs(v * 2 * n - 1) < 0.1


def test_log_step_decreasing(table):
    steps = [log_step(table, n) for n in range(1, 5000)]
    assert all(b < a for a, b in zip(steps, steps[1:]))


def test_log_step_range(table):
    with pytest.raises(IndexError):
        log_step(table, 0)
    with pytest.raises(IndexError):
        log_step(table, table.nmax)


def test_capacity_cap():
    with pytest.raises(CapacityError):
        build_lambda_table(2**24)
    with pytest.raises(CapacityError):
        build_lambda_table(100, cap=50)


def test_bounds_every_index(million_table):
    lam = million_table.values
    k = np.arange(len(lam), dtype=float)
    assert np.all(np.sqrt(k) <= lam)
    assert np.all(lam <= np.sqrt(2 * k))


def test_strictly_increasing_and_ratio_decreasing(million_table):
    lam = million_table.values
    assert np.all(np.diff(lam) > 0)
    ratios = lam[2:] / lam[1:-1]
    assert np.all(ratios > 1)
    idx = np.unique(np.geomspace(1, len(ratios) - 1, 400).astype(int))
    steps = [log_step(million_table, int(n)) for n in idx]
    assert all(b < a for a, b in zip(steps, steps[1:]))


def test_square_gap_approaches_two(million_table):
    idx = [10, 100, 1000, 10**4, 10**5, 10**6]
    gaps = [abs(square_gap(million_table, n) - 2) for n in idx]
    assert all(b < a for a, b in zip(gaps, gaps[1:]))
    # oracle value at 30 digits: -5.000015181e-7
    assert gaps[-1] == pytest.approx(5.000015181e-7, rel=1e-6)
    assert gaps[-1] < 1e-4
    direct = million_table[10**6 + 1] ** 2 - million_table[10**6] ** 2
    assert direct == pytest.approx(square_gap(million_table, 10**6), abs=1e-9)


def test_lambda_squared_over_n(million_table):
    n = 10**6
    assert million_table[n] == pytest.approx(LAMBDA_MILLION, rel=1e-9)
    dev = million_table[n] ** 2 / n - 2
    assert dev == pytest.approx(-8.072279494e-6, rel=1e-3)
    assert abs(dev) < 1e-4


def test_fixed_point_equation(table):
    m = moments(table, 10**4)
    sums = partial_sums(m)
    assert max(abs(mk * s - 1) for mk, s in zip(m, sums)) < 1e-12


def test_quadratic_moment_recursion(table):
    for k in range(0, 2000):
        a, b = moment(table, k), moment(table, k + 1)
        assert abs(b * b + b / a - 1) < 1e-12


def test_concavity_inequality(table):
    lam = table.values
    for n in range(1, 1001):
        for k in range(1, min(n, 50) + 1):
            lhs = (k - 1) * math.log(lam[n + 1]) + math.log(lam[n - k + 1])
            rhs = k * math.log(lam[n])
            assert lhs <= rhs + 1e-12


def test_partial_sums_compensated():
    vals = [1.0] + [1e-16] * 1000
    assert partial_sums(vals)[-1] == pytest.approx(1.0 + 1e-13, rel=1e-15)


def test_extended_matches_standard(ext_table, table):
    assert ext_table.precision_digits >= 30
    for n in (1, 2, 3, 17, 2999):
        assert float(ext_table[n]) == pytest.approx(table[n], rel=2e-15)
    ctx = ext_table.arith.ctx
    assert abs(ext_table[3] - ctx.mpf(LAMBDA_3_TEXT)) < 1e-28
