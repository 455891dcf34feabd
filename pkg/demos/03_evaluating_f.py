# %% [markdown]
# # Evaluating f and F on the complex plane
#
# f(z) = lim psi^n(seed_n(z)) with a seed close to f(n+z).  The first-order
# seeds a_n, b_n converge like 1/n; the default evaluator interpolates
# log lambda through 9 nodes and converges like n^-8.

# %%
from psimoments import (EvalConfig, bracket_f, error_bound_step1, eval_F, eval_f, eval_f_real,
                        seed_b, shift_identity_check)
from psimoments.dynamics import iterate
from psimoments.evaluator import default_table

table = default_table(EvalConfig())
cfg = EvalConfig()

print("first-order seed b_n at s = 0.5:")
for n in (16, 256, 4096, 65536):
    w, _ = iterate(seed_b(table, n, 0.5), n)
    print(f"  n={n:>6}  {w:.15f}")
r = eval_f(0.5, cfg, table)
print("default evaluator:", r)

# %% [markdown]
# Integers give back the table; z = -1 is a pole and is flagged, not raised.

# %%
for z in (1, 2, 5, 0, -1, 0.3 + 2j, -0.5 + 3j):
    r = eval_f(z, cfg, table)
    print(f"f({z}) = {complex(r.value):.12f}  err={r.error_estimate:.1e}  n={r.n_used}  flags={sorted(r.flags)}")
print("F(3) =", complex(eval_F(3, cfg, table)), " m_3 =", 1 / table[4])

# %% [markdown]
# On (0, 1] the two first-order seeds bracket f(s) with certainty, and the
# width is bounded explicitly.  phi carries the bracket to s > 1.

# %%
for n in (16, 256, 4096):
    lo, hi = bracket_f(0.5, n, table)
    print(f"n={n:>5}  [{lo:.10f}, {hi:.10f}]  width={hi - lo:.2e}  bound={error_bound_step1(0.5, n, table):.2e}")
real = eval_f_real(5.5, EvalConfig(n_max=2**14), table)
print("certified f(5.5):", complex(real).real, "+/-", real.error_estimate)
print("high-order f(5.5):", complex(eval_f(5.5, cfg, table)).real)

# %% [markdown]
# The functional equation f(z) = psi(f(z+1)) holds between two independent evaluations.

# %%
for z in (1.5, 0.3 + 2j, -0.4 - 2.5j):
    print(z, shift_identity_check(z, cfg, table))
