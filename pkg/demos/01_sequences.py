# %% [markdown]
# # The lambda table and the fixed-point moments
#
# lambda_0 = 0 and lambda_{n+1} = (lambda_n + sqrt(lambda_n^2 + 4)) / 2.
# The moments m_n = 1/lambda_{n+1} solve m_n (1 + m_1 + ... + m_n) = 1.

# %%
import math

import numpy as np

from psimoments import build_lambda_table, log_step, moment, rho
from psimoments.moments import fixed_point_residual
from psimoments.sequences import square_gap

table = build_lambda_table(10**6 + 1)
for n in range(6):
    print(f"lambda_{n} = {table[n]:.15f}   m_{n} = {moment(table, n):.15f}")

# %% [markdown]
# Growth: sqrt(n) <= lambda_n <= sqrt(2n), and lambda_n^2 / n -> 2 slowly.

# %%
k = np.arange(table.nmax + 1, dtype=float)
print("lower bound holds everywhere:", bool(np.all(np.sqrt(k) <= table.values)))
print("upper bound holds everywhere:", bool(np.all(table.values <= np.sqrt(2 * k))))
for n in (10, 1000, 10**6):
    print(f"n={n:>8}  lambda_n^2/n - 2 = {table[n]**2 / n - 2:+.3e}"
          f"   lambda_(n+1)^2 - lambda_n^2 - 2 = {square_gap(table, n) - 2:+.3e}")

# %% [markdown]
# The ratio lambda_{n+1}/lambda_n is 1 + O(1/n).  Its log is taken through
# log1p so nothing cancels, and it sits close to 1/(2n).

# %%
for n in (1, 10, 10**3, 10**6):
    naive = math.log(table[n + 1] / table[n])
    print(f"n={n:>8}  log_step={log_step(table, n):.16e}  naive={naive:.16e}  2n*step={2 * n * log_step(table, n):.6f}")

# %% [markdown]
# The disc radii rho_{n,N} = lambda_n - lambda_{n-N} are summed as
# sum 1/lambda_{n+1-k}: the difference form drops digits once N << n.

# %%
n, N = 10**6, 3
print("sum form       ", repr(rho(table, n, N)))
print("difference form", repr(table[n] - table[n - N]))
print("fixed-point residual up to n=10^4:", fixed_point_residual(table, 10**4))
