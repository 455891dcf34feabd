# %% [markdown]
# # Sampling f on a rectangle
#
# The same records the `psimoments grid` command writes.  Rows run with the
# imaginary part outer and the real part inner.

# %%
import numpy as np

from psimoments import EvalConfig, GridSpec, evaluate_grid
from psimoments.evaluator import default_table
from psimoments.grid import records_to_csv

spec = GridSpec(-2.5, 4, -3, 3, 66, 61)
records = evaluate_grid(spec, default_table(EvalConfig()))
print(records_to_csv(records[:4]))
flags = {}
for r in records:
    flags[r.flag] = flags.get(r.flag, 0) + 1
print("flag counts:", flags)

# %%
mod = np.array([np.hypot(r.f_re, r.f_im) for r in records]).reshape(spec.im_steps, spec.re_steps)
try:
    import matplotlib.pyplot as plt
except ImportError:
    print("matplotlib not installed; log10|f| row through Im z = 0:")
    print(np.round(np.log10(mod[spec.im_steps // 2]), 2))
else:
    plt.imshow(np.log10(mod), origin="lower", extent=(spec.re_min, spec.re_max, spec.im_min, spec.im_max))
    plt.colorbar(label="log10 |f|")
    plt.savefig("f_modulus.png", dpi=120)
    print("wrote f_modulus.png")
