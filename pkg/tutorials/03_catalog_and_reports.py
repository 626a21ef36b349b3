# %% [markdown]
# # Other domains, reports and contour grids

# %%
import tempfile
from pathlib import Path

import numpy as np

from zolo import SolvePolicy, make_example, solve_z4
from zolo.domains import CATALOG
from zolo.harness import ExperimentConfig, run_experiment, sweep_csv, sweep_orders
from zolo.rational import poles

print(sorted(CATALOG))

# %% [markdown]
# Conjugate-symmetric domains give conjugate-symmetric poles.

# %%
for name in ("1b", "2a", "7", "pm2"):
    sol = solve_z4(make_example(name), "loewner", SolvePolicy())
    p = poles(sol.h4)
    print(name, "order", sol.order, "sigma %.2e" % sol.sigma,
          "closure %.1e" % np.abs(np.sort_complex(p) - np.sort_complex(p.conj())).max())

# %% [markdown]
# A report bundles sigma, coefficients, poles and zeros, and writes a
# log10|h3| grid next to the JSON file.

# %%
out = Path(tempfile.mkdtemp()) / "1a_r6.json"
rep = run_experiment(ExperimentConfig("1a", order=6, output_path=str(out), grid_resolution=64))
print(out.read_text()[:400])
print(rep.grid_csv.splitlines()[:3])

# %%
rep = sweep_orders(ExperimentConfig("1a", methods=("loewner", "aaa")), [2, 4, 6])
print(sweep_csv(rep))
