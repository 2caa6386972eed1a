"""
Fitting the hyperbolic curve to one author
==========================================

Three numbers pin down the whole rank-citation curve: the top paper's
count M, the number of cited papers N and the h-index. Here we take
M=718, N=171, h=50 and look at what falls out.
"""
import numpy as np

import citecurve as cc

sig = cc.CurveSignature(718, 171, 50)
full = cc.calibrate_full(sig)
print(f"a = {full.a:.4f}  b = {full.b:.2f}  c = {full.c:.4f}")

# the curve goes through the three anchors
print("f(0), f(h), f(N):", full(0.0), full(50.0), round(full(171.0), 12))

# %%
# Head and tail limits
# --------------------
# Letting N or M run off to infinity gives two simpler curves. The head
# one is the useful approximation above rank h, the tail one below it.
head = cc.calibrate_head(sig.M, sig.h)
tail = cc.calibrate_tail(sig.N, sig.h)
print(f"head: b={head.b_head:.2f} c={head.c_head:.4f}")
print(f"tail: a={tail.a_tail:.4f} b={tail.b_tail:.2f}")

ranks = np.array([0.0, 10, 25, 50, 100, 170])
print("rank  full   head   power")
power = cc.calibrate_power_law(sig.M, sig.h)
for x in ranks:
    hv = head(x) if x <= sig.h else float("nan")
    pv = power(max(x, 1.0))
    print(f"{x:4.0f} {full(x):6.1f} {hv:6.1f} {pv:6.1f}")

# %%
# Areas under the curve estimate total citations
# ----------------------------------------------
print(f"F       = {cc.area_full(full):.1f}")
print(f"F (big) = {cc.area_full_asymptotic(sig):.1f}")
print(f"F_head  = {cc.area_head(sig.M, sig.h):.1f}")
print(f"F_tail  = {cc.area_tail(sig.N, sig.h):.1f}")

# %%
# A synthetic author drawn from the curve keeps the same signature
profile = cc.synth_profile(sig, author_id="eng")
print("first ten counts:", profile.counts[:10])
print("recovered signature:", cc.signature_of(profile).as_tuple())
