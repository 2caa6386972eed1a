import math

import pytest
from hypothesis import given, settings, strategies as st

from citecurve import (
    CurveSignature,
    DegenerateSignature,
    DomainError,
    approx_A,
    approx_alpha,
    approx_dc_i,
    approx_dc_i_simplified,
    approx_dc_o,
    approx_dc_o_simplified,
    approx_e,
    approx_g,
    approx_h2,
    approx_h_prime,
    approx_h_prime_simplified,
    approx_h_prime_triangle,
    approx_hg,
    approx_indices,
    approx_R,
    area_full,
    area_full_asymptotic,
    area_head,
    calibrate_full,
    h2_from_theta,
)

# closed-form goldens for (718, 171, 50), from 40-digit mpmath evaluation
GOLDEN = {
    "alpha": 2.8940871146945919,
    "A": 143.19405933227665,
    "R": 84.615028018749912,
    "g": 87.331851645604777,
    "hg": 66.080198110176992,
    "e": 68.262017012492626,
    "h_prime": 79.473547624995633,
    "h_prime_triangle": 117.48043621200077,
    "h2": 13.572088082974533,
    "dc_i": 93.194059332276654,
    "dc_o": 34.757097494409218,
}

signatures = st.builds(
    lambda h, mr, nr: CurveSignature(h * mr, h * nr, h),
    st.floats(1, 5e3),
    st.floats(1.001, 5e3),
    st.floats(1.001, 5e3),
)


def test_engineering_goldens(eng):
    rep = approx_indices(eng)
    for name, value in GOLDEN.items():
        assert getattr(rep, name) == pytest.approx(value, rel=1e-12), name
    assert rep.reasons == {}


def test_alpha():
    h = 30.0
    assert approx_alpha(CurveSignature(math.e * h, h, h)) == pytest.approx(0.0, abs=1e-12)
    assert approx_alpha(CurveSignature(60, 60, 50)) < 0


def test_A_limits():
    h = 40.0
    assert approx_A(CurveSignature(h * (1 + 1e-9), 100, h)) == pytest.approx(h, rel=1e-8)
    sig = CurveSignature(900, 200, 45)
    assert approx_A(sig) / sig.h == pytest.approx(900 / 855 * math.log(20), rel=1e-12)
    with pytest.raises(DegenerateSignature):
        approx_A(CurveSignature(50, 100, 50))


def test_R_matches_head_area(eng):
    assert approx_R(eng) ** 2 == pytest.approx(area_head(718, 50), rel=1e-12)
    assert approx_R(eng) >= 50


def test_g_and_hg_special_point():
    h = 10.0
    sig = CurveSignature(math.e**2 * h / 4, 50, h)  # log argument equals e
    assert approx_g(sig) == pytest.approx(h, rel=1e-12)
    assert approx_hg(sig) == pytest.approx(h, rel=1e-12)


def test_g_domain():
    # 4M <= e h needs M < h, which CurveSignature forbids; use a bare stand-in
    class S:
        M, N, h = 1.0, 5.0, 2.0

    with pytest.raises(DomainError):
        approx_g(S)
    with pytest.raises(DomainError):
        approx_hg(S)


def test_g_exceeds_h_when_log_above_one(eng):
    assert approx_g(eng) > eng.h


def test_e_limits():
    h = 25.0
    assert approx_e(CurveSignature(h * (1 + 1e-10), 60, h)) == pytest.approx(0.0, abs=1e-3)


def test_e_when_top_is_h_squared():
    M, h = 1e4, 100.0
    ours = approx_e(CurveSignature(M, 1e4, h)) ** 2
    target = M * (0.5 * math.log(M) - 1)
    assert ours == pytest.approx(36516.870565536276, rel=1e-12)
    assert abs(ours - target) / target <= 0.02


def test_h_prime_forms(eng):
    assert approx_h_prime(CurveSignature(300, 300, 40)) == pytest.approx(40, rel=1e-12)
    assert approx_h_prime_triangle(eng) == pytest.approx(50 * math.sqrt(668 / 121), rel=1e-12)
    with pytest.raises(DomainError):
        approx_h_prime_simplified(CurveSignature(718, 120, 50))  # N < e h
    with pytest.raises(DegenerateSignature):
        approx_h_prime(CurveSignature(718, 50, 50))


def test_h2_forms(eng):
    assert approx_h2(eng) == pytest.approx(50 ** (2 / 3), rel=1e-14)
    assert approx_h2(CurveSignature(5, 5, 1)) == 1
    with pytest.raises(DomainError):
        h2_from_theta(1000, CurveSignature(60, 60, 50))


def test_dc_forms(eng):
    assert approx_dc_i(eng) == pytest.approx(approx_e(eng) ** 2 / 50, rel=1e-12)
    h = 20.0
    assert approx_dc_i_simplified(CurveSignature(math.e * h, 80, h)) == pytest.approx(0, abs=1e-12)
    with pytest.raises(DomainError):
        approx_dc_i_simplified(CurveSignature(2 * h, 80, h))
    assert approx_dc_o(eng) == pytest.approx(50 - 1844.3912031764847 / 121, rel=1e-12)
    assert approx_dc_o(CurveSignature(718, 1e12, 50)) == pytest.approx(50, rel=1e-6)


def test_dc_o_grows_with_N():
    for h in (5.0, 20.0, 80.0):
        values = [approx_dc_o(CurveSignature(10 * h, k * h, h)) for k in range(2, 101)]
        assert all(b > a for a, b in zip(values, values[1:]))


@settings(max_examples=500, deadline=None)
@given(signatures)
def test_identity_chain(sig):
    fh = area_head(sig.M, sig.h)
    assert approx_R(sig) ** 2 == pytest.approx(fh, rel=1e-12)
    assert approx_e(sig) ** 2 == pytest.approx(fh - sig.h**2, rel=1e-9, abs=1e-9 * sig.h**2)
    assert approx_dc_i(sig) == pytest.approx(approx_e(sig) ** 2 / sig.h, rel=1e-12, abs=1e-12)
    if 4 * sig.M > math.e * sig.h:
        assert approx_hg(sig) == pytest.approx(math.sqrt(sig.h * approx_g(sig)), rel=1e-12)
    if approx_alpha(sig) > 0:
        theta = area_full_asymptotic(sig)
        assert h2_from_theta(theta, sig) == pytest.approx(sig.h ** (2 / 3), rel=1e-12)


def test_h2_prelimit_is_below_h_squared():
    # h2^3 = h^2 (M - h2^2)/M solved by bisection sits below h^2 for finite M
    for M, h in ((718, 50), (1e4, 100), (300, 20)):
        lo, hi = 0.0, h ** (2 / 3)
        for _ in range(200):
            mid = (lo + hi) / 2
            if mid**3 - h * h * (M - mid * mid) / M < 0:
                lo = mid
            else:
                hi = mid
        assert lo**3 < h * h
        assert approx_h2(CurveSignature(M, M, h)) ** 3 == pytest.approx(h * h, rel=1e-12)


def test_asymptotic_forms_agree_at_large_ratios():
    h = 50.0
    sig = CurveSignature(1e3 * h, 1e3 * h, h)
    pairs = [
        (approx_dc_i_simplified(sig), approx_dc_i(sig)),
        (approx_dc_o_simplified(sig), approx_dc_o(sig)),
        (approx_h_prime_simplified(sig), approx_h_prime(sig)),
        (area_full_asymptotic(sig), area_full(calibrate_full(sig))),
    ]
    for simple, full in pairs:
        assert abs(simple - full) / full <= 0.05


def test_report_marks_undefined_fields():
    rep = approx_indices(CurveSignature(718, 120, 50))
    assert rep.h_prime_simplified is None
    assert rep.reasons["h_prime_simplified"] == "outside_domain"
    rep = approx_indices(CurveSignature(100, 100, 50))
    assert rep.F is None and rep.reasons["F"] == "degenerate_signature"
    assert rep.F_head is not None
    rep = approx_indices(CurveSignature(50, 50, 50))
    assert rep.A is None and rep.h2 is not None


@settings(max_examples=200, deadline=None)
@given(signatures)
def test_report_fields_finite_nonnegative(sig):
    rep = approx_indices(sig)
    for name, value in rep.as_dict().items():
        if value is None or name == "alpha":
            continue
        assert math.isfinite(value) and value >= 0, name
