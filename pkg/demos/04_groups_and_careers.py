"""
Groups and careers
==================

Merging the papers of several authors gives a group h-index h*. Two
estimates need only each member's signature.
"""
import citecurve as cc

members = [
    cc.CurveSignature(336, 15, 13),
    cc.CurveSignature(423, 90, 27),
    cc.CurveSignature(2108, 63, 32),
    cc.CurveSignature(1161, 34, 18),
]
for r in range(1, len(members) + 1):
    q = cc.group_h_quadratic(members[:r])
    s = cc.group_h_sqrt(members[:r])
    print(f"{r} members: quadratic {q:6.2f}  sqrt {s:6.2f}")

# with actual counts we can also merge and count
profiles = [cc.synth_profile(m, author_id=f"m{i}") for i, m in enumerate(members)]
res = cc.group_estimate(members, profiles)
print("merged h* =", res.h_star_empirical)

# %%
# Growing linearly in time
# ------------------------
# If M, N and h all grow in proportion to career length, the indices
# follow simple power laws in t.
rates = cc.rates_from_snapshot(cc.CurveSignature(718, 171, 50), 25)
for t in (10, 25, 40):
    print(f"t={t:2d}  g={cc.trajectory(rates, t, 'g'):6.1f}  "
          f"h2={cc.trajectory(rates, t, 'h2'):5.2f}  "
          f"Theta_head={cc.trajectory(rates, t, 'theta_head'):8.0f}")
th = cc.trajectory(rates, 25, "theta_head")
print(f"head citations grow by {cc.theta_head_growth_rate(th, 25):.0f} per year at t=25")
