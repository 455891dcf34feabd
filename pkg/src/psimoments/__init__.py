"""Fixed-point Hausdorff moment sequence and the meromorphic transforms f, F.

The moments m_n solve m_n (1 + m_1 + ... + m_n) = 1.  With lambda_n = 1/m_{n-1}
the Bernstein transform f of their measure satisfies f(n) = lambda_n and
f(z) = psi(f(z + 1)) with psi(z) = z - 1/z; the Mellin transform is
F(z) = 1/f(z + 1).
"""
from .dynamics import (INFINITY, DiscCert, ExtendedComplex, check_disc_step, phi, phi_iter,
                       psi, psi_iter)
from .evaluator import (MAX_DEPTH, OVERFLOW, POLE_PROXIMITY, Bracket, EvalConfig, EvalResult,
                        bracket_f, error_bound_step1, eval_F, eval_f, eval_f_real, seed_a,
                        seed_b, seed_interp, shift_identity_check)
from .grid import GridRecord, GridSpec, evaluate_grid
from .moments import (DiffTable, MomentSeq, completely_monotone_check, difference_table,
                      fixed_point, fixed_point_residual, iterate_T, transform_T)
from .precision import EXTENDED, STANDARD, get_arithmetic
from .sequences import (CapacityError, LambdaTable, build_lambda_table, log_step, moment,
                        moments, rho, square_gap)

__version__ = "0.1.0"

__all__ = [
    "INFINITY", "DiscCert", "ExtendedComplex", "check_disc_step", "phi", "phi_iter", "psi",
    "psi_iter",
    "MAX_DEPTH", "OVERFLOW", "POLE_PROXIMITY", "Bracket", "EvalConfig", "EvalResult",
    "bracket_f", "error_bound_step1", "eval_F", "eval_f", "eval_f_real", "seed_a", "seed_b",
    "seed_interp", "shift_identity_check",
    "GridRecord", "GridSpec", "evaluate_grid",
    "DiffTable", "MomentSeq", "completely_monotone_check", "difference_table", "fixed_point",
    "fixed_point_residual", "iterate_T", "transform_T",
    "EXTENDED", "STANDARD", "get_arithmetic",
    "CapacityError", "LambdaTable", "build_lambda_table", "log_step", "moment", "moments", "rho",
    "square_gap",
]
