"""
Closed-form indices versus counting
===================================

Every common h-type index has a closed-form counterpart written in terms
of (M, N, h). We generate one noisy author and line the two up.
"""
import numpy as np

import citecurve as cc

sig = cc.CurveSignature(718, 171, 50)
rng = np.random.default_rng(7)
profile = cc.synth_profile(sig, noise=0.15, rng=rng, author_id="noisy")

emp = cc.empirical_indices(profile)
approx = cc.approx_indices(cc.signature_of(profile))

print(f"signature from counts: M={emp.M} N={emp.N} h={emp.h}")
print(f"{'index':<10}{'counted':>10}{'formula':>10}")
for name in ("g", "A", "R", "e", "hg", "h_prime", "h2", "dc_i", "dc_o"):
    print(f"{name:<10}{getattr(emp, name):>10.2f}{getattr(approx, name):>10.2f}")

# %%
# Formulas that cannot be evaluated say why instead of raising
odd = cc.approx_indices(cc.CurveSignature(100, 100, 50))
print({k: v for k, v in odd.reasons.items()})

# %%
# Total citations follow Theta = alpha h^2
print(f"alpha = {approx.alpha:.3f}, alpha h^2 = {approx.alpha * emp.h ** 2:.0f}, "
      f"counted total = {emp.theta}")
