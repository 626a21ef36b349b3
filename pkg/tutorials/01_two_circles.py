# %% [markdown]
# # Two circles: the closed-form optimum
#
# E is the circle |z + 1| = 0.5 and F is |z - 1| = 0.5. For this pair the
# optimal ratio is known in closed form, so every numerical method can be
# checked against it.

# %%
import numpy as np

from zolo import make_example, measure_sigma, optimal_sign_two_circles, optimal_two_circles
from zolo.zolotarev import tau_from_sigma

for r in (2, 6, 8, 26):
    h3, sigma = optimal_two_circles(0.5, 1.0, r)
    print(f"r = {r:2d}  sigma = {sigma:.4e}  tau = {tau_from_sigma(sigma):.4e}")

# %% [markdown]
# The formula value agrees with the ratio max_E|h3| / min_F|h3| measured on samples.

# %%
inst = make_example("1a", 2048)
for r in (2, 8, 26):
    h3, sigma = optimal_two_circles(0.5, 1.0, r)
    print(r, np.log10(sigma), np.log10(measure_sigma(h3, inst)))

# %% [markdown]
# The matching sign approximant at r = 2 has odd numerator and even denominator.

# %%
h4, _ = optimal_sign_two_circles(0.5, 1.0, 2)
print("numerator  ", h4.padded_numerator())
print("denominator", h4.denominator)
