"""
Stencil sampling designs
========================

Build every pure design from the same 10-step run and look at where the
designed stencils land relative to the trajectory data.
"""

import numpy as np

from stencil_nse import GpSpec, GridSpec, TimeSpec, allen_cahn, fit_pca, harvest, sobol_points
from stencil_nse.designs import PURE_STRATEGIES, build_pure, short_run

grid, short = GridSpec(32), TimeSpec(1e-3, 10)
system, gp = allen_cahn(1e-3), GpSpec(seed=11)

# the first Sobol' points in two dimensions fill the square evenly
print("Sobol' points:\n", sobol_points(2, 8))

run = short_run(system, grid, short, gp)
source = harvest(run)
basis = fit_pca(source)
print("PC variances:", np.array2string(basis.eigenvalues, precision=4))
print("PC1 loading:", np.round(basis.loadings[:, 0], 3))

# distance of each design's stencils from the span of the leading component
for strategy in PURE_STRATEGIES:
    ds = build_pure(strategy, system, grid, short, gp, trajectory=run)
    resid = basis.scores(ds.inputs)[:, 1:]
    extra = "" if "pca" not in strategy else f"  acceptance {ds.meta['pca_acceptance']:.2f}"
    print(f"{strategy:15s} n={ds.count}  label std {ds.labels.std():9.3f}  "
          f"off-PC1 rms {np.sqrt(np.mean(resid ** 2)):.4f}{extra}")
