"""
Is an author's curve hyperbolic?
================================

Near the top, 1/Psi(n) should be roughly linear in n if the head model
holds. We also histogram h over a population into ``h_hist.svg``.
"""
import numpy as np

import citecurve as cc

profile = cc.synth_profile(cc.CurveSignature(2000, 300, 40), mode="head", author_id="x")
points, fit = cc.reciprocal_diagnostic(profile, 30)
print(f"slope={fit.slope:.2e} intercept={fit.intercept:.2e} R2={fit.r_squared:.4f}")
print(f"1/b_head = {1 / cc.calibrate_head(2000, 40).b_head:.2e}")

# %%
rng = np.random.default_rng(1)
hs = [cc.empirical_h(cc.empirical.random_profile(rng)) for _ in range(500)]
bins = cc.histogram(hs, 10)
for lo, hi, n in bins:
    print(f"[{lo:5.1f}, {hi:5.1f})  {'#' * (n // 5)}")
cc.emit_histogram_svg(bins, "h_hist.svg", label="h")
