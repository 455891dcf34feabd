# %% [markdown]
# # The transform T and the Hausdorff criterion

# %%
from psimoments import (MomentSeq, build_lambda_table, completely_monotone_check, fixed_point,
                        iterate_T, transform_T)

table = build_lambda_table(600)
print(transform_T(MomentSeq([1, 1, 1])).values)
fp = fixed_point(table, 500)
print("T(m) - m, max relative:", max(abs(a - b) / b for a, b in zip(transform_T(fp), fp)))

# %% [markdown]
# Iterating T from the all-ones prefix approaches the fixed point (observed,
# not proved).

# %%
seq = MomentSeq([1.0] * 12)
target = fixed_point(table, 11)
for k in (1, 5, 10, 20, 50):
    out = iterate_T(seq, k)
    print(k, max(abs(a - b) for a, b in zip(out, target)))

# %% [markdown]
# Complete monotonicity: all signed differences (-1)^k Delta^k m_n are >= 0.

# %%
print(completely_monotone_check(fixed_point(table, 25), 12, 1e-8))
print(completely_monotone_check(MomentSeq([1, 0.1, 0.9]), 2, 0.0))
ext = build_lambda_table(40, "extended")
print(completely_monotone_check(fixed_point(ext, 25), 25, 1e-15))
