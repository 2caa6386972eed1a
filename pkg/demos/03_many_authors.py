"""
Comparing over a population
===========================

With many authors we can regress each counted index on its formula
through the origin. A gradient near one means the formula tracks the
count. The scatter is written to ``r_index.svg``.
"""
import numpy as np

import citecurve as cc

rng = np.random.default_rng(2024)
profiles = {}
for i in range(120):
    h = int(rng.integers(5, 60))
    sig = cc.CurveSignature(round(h * rng.uniform(10, 50)), round(h * rng.uniform(5, 25)), h)
    p = cc.synth_profile(sig, noise=0.1, rng=rng, author_id=f"a{i:03d}")
    profiles[p.author_id] = p
ds = cc.Dataset(profiles=profiles)

for index in ("R", "e", "A", "g", "h_prime", "dc_o"):
    series, fit = cc.compare_index(ds, index)
    print(f"{index:<8} gradient={fit.gradient:.3f} R2={fit.r_squared:.4f} "
          f"excluded={series.excluded_count}")

series, fit = cc.compare_index(ds, "R")
cc.emit_scatter_svg(series, fit, "r_index.svg")

# %%
# The same table as a report, one row per author and index
rows = cc.analysis_rows(ds)
print(cc.emit_report_csv(rows).splitlines()[:4])
