# %% [markdown]
# # Loewner, AAA and AAA-Lawson on the two circles
#
# All three methods approximate the sign function (-1 on E, +1 on F) and the
# result is mapped to the ratio problem. Lower sigma is better.

# %%
import numpy as np

from zolo import SolvePolicy, make_example, solve_z4
from zolo.zolotarev import optimal_two_circles

inst = make_example("1a")
for r in (2, 4, 8):
    row = [f"r = {r}"]
    for method in ("loewner", "aaa", "aaa_lawson"):
        sol = solve_z4(inst, method, SolvePolicy(order=r, lawson_iterations=200))
        row.append(f"{method} {sol.sigma:.3e} ({sol.elapsed_seconds:.2f}s)")
    row.append(f"optimum {optimal_two_circles(0.5, 1.0, r)[1]:.3e}")
    print("  ".join(row))

# %% [markdown]
# Without a fixed order the Loewner method reads the order off the singular
# values of the pencil.

# %%
sol = solve_z4(inst, "loewner", SolvePolicy(tol=1e-14))
print("order", sol.order, "log10 sigma", np.log10(sol.sigma))
