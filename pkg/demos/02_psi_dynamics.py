# %% [markdown]
# # psi(z) = z - 1/z, its inverse branch, and the disc certificates

# %%
from psimoments import DiscCert, build_lambda_table, check_disc_step, phi, phi_iter, psi, psi_iter

table = build_lambda_table(1000)
print("psi(golden ratio) =", psi(table[2]).value)
print("psi(i) =", psi(1j).value, "  psi(0) =", psi(0))
print("phi^5(0) =", phi_iter(0.0, 5), " lambda_5 =", table[5])
print("phi(-1e8) =", phi(-1e8), " (no cancellation)")

# %% [markdown]
# lambda_n runs back to 0 in exactly n steps; one more step lands on the pole.

# %%
for n in (5, 20, 50):
    print(n, psi_iter(table[n], n).value, psi_iter(table[n], n + 1))

# %% [markdown]
# Off the real line orbits escape, but slowly: |psi^n(z)| grows like sqrt(2n).

# %%
for n in (10, 100, 1000, 10000):
    print(n, abs(psi_iter(3 + 1j, n).value))

# %% [markdown]
# Disc certificates: psi maps D(lambda_n, c rho_{n,N}) into
# D(lambda_{n-1}, c rho_{n-1,N}).  Sampling checks the inclusion.

# %%
for n, N, c in [(10, 3, 0.5), (10, 3, 1.0), (200, 20, 0.25)]:
    cert = DiscCert.build(table, n, N, c)
    print(cert, check_disc_step(cert, table, 10_000, seed=0))
too_big = DiscCert(10, 3, 1.0, table[10], 3 * DiscCert.build(table, 10, 3, 1.0).radius)
print("inflated disc fails:", not check_disc_step(too_big, table, 10_000, seed=0))
