import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from citecurve import (
    CitationProfile,
    CurveSignature,
    DegenerateSignature,
    EmptyGroup,
    empirical_h,
    group_estimate,
    group_h_quadratic,
    group_h_sqrt,
    merge_profiles,
    signature_of,
    synth_profile,
)
from citecurve.empirical import random_profile

from conftest import random_int_signature

# (M_i, N_i, h_i) for the nine-author validation group
NINE = [
    (336, 15, 13),
    (423, 90, 27),
    (2108, 63, 32),
    (1161, 34, 18),
    (262, 396, 44),
    (364, 128, 31),
    (901, 64, 24),
    (272, 124, 46),
    (513, 94, 19),
]
NINE_SQRT = [30.9, 44.7, 48.2, 68.2, 75.5, 79.3, 94.0, 96.0]

members = st.lists(
    st.builds(
        lambda h, mr: CurveSignature(h * mr, h * 2, h),
        st.floats(1, 500),
        st.floats(1.01, 100),
    ),
    min_size=1,
    max_size=9,
)


def nine(r):
    return [CurveSignature(*row) for row in NINE[:r]]


def test_merge_profiles():
    merged = merge_profiles([CitationProfile("a", (5, 3)), CitationProfile("b", (4, 1))])
    assert merged.counts == (5, 4, 3, 1)
    single = CitationProfile("a", (7, 2, 2))
    assert merge_profiles([single]).counts == single.counts
    with pytest.raises(EmptyGroup):
        merge_profiles([])


def test_merged_signature_matches_star_formulas():
    rng = np.random.default_rng(11)
    for _ in range(100):
        ps = [random_profile(rng) for _ in range(int(rng.integers(1, 6)))]
        merged = merge_profiles(ps)
        assert merged.N == sum(p.N for p in ps)
        assert merged.M == max(p.M for p in ps)
        assert empirical_h(merged) >= max(empirical_h(p) for p in ps)


@pytest.mark.parametrize("r, expected", list(zip(range(2, 10), NINE_SQRT)))
def test_nine_author_sqrt_column(r, expected):
    assert abs(group_h_sqrt(nine(r)) - expected) <= 0.05


def test_quadratic_first_two_members():
    # b = (175.80, 778.70), c = (0.523, 1.841)
    B = 336 * 13**2 / (336 - 13) + 423 * 27**2 / (423 - 27)
    C = 13**2 / (336 - 13) + 27**2 / (423 - 27)
    assert B == pytest.approx(175.80 + 778.70, abs=0.01)
    assert C == pytest.approx(0.523 + 1.841, abs=0.001)
    assert group_h_quadratic(nine(2)) == pytest.approx(29.735627560408584, rel=1e-12)


def test_quadratic_solves_the_fixed_point():
    # h* (h* + sum c) = sum b
    for r in range(1, 10):
        hs = group_h_quadratic(nine(r))
        B = sum(M * h * h / (M - h) for M, _, h in NINE[:r])
        C = sum(h * h / (M - h) for M, _, h in NINE[:r])
        assert hs * (hs + C) == pytest.approx(B, rel=1e-12)


def test_single_member_recovers_h():
    sig = CurveSignature(1e7, 100, 40)
    assert group_h_quadratic([sig]) == pytest.approx(40, rel=1e-12)
    # sqrt estimate: h sqrt(M/(M-h)) approaches h from above
    prev = math.inf
    for M in (100.0, 1e3, 1e5, 1e8):
        v = group_h_sqrt([CurveSignature(M, 100, 40)])
        assert 40 < v < prev
        prev = v
    assert prev == pytest.approx(40, rel=1e-6)


def test_degenerate_member_is_named():
    with pytest.raises(DegenerateSignature, match="member 1"):
        group_h_sqrt([CurveSignature(100, 50, 10), CurveSignature(20, 50, 20)])
    with pytest.raises(EmptyGroup):
        group_h_quadratic([])


@settings(max_examples=300, deadline=None)
@given(members)
def test_quadratic_never_exceeds_sqrt(ms):
    q, s = group_h_quadratic(ms), group_h_sqrt(ms)
    assert q <= s * (1 + 1e-12)
    bound = max(m.h * math.sqrt(m.M / (m.M - m.h)) for m in ms)
    assert s >= bound * (1 - 1e-12)


@settings(max_examples=100, deadline=None)
@given(members)
def test_permutation_invariance(ms):
    q, s = group_h_quadratic(ms), group_h_sqrt(ms)
    for perm in itertools.islice(itertools.permutations(ms), 6):
        assert group_h_quadratic(list(perm)) == q
        assert group_h_sqrt(list(perm)) == s


@settings(max_examples=200, deadline=None)
@given(members, st.floats(1, 500), st.floats(1.01, 100))
def test_adding_member_increases_estimates(ms, h, mr):
    extra = CurveSignature(h * mr, 2 * h, h)
    assert group_h_sqrt(ms + [extra]) > group_h_sqrt(ms)
    # the quadratic root only moves up when the newcomer's top paper clears h*
    before = group_h_quadratic(ms)
    after = group_h_quadratic(ms + [extra])
    if extra.M > before * (1 + 1e-9):
        assert after > before
    elif extra.M < before * (1 - 1e-9):
        assert after < before


def test_quadratic_can_drop_for_weak_newcomer():
    base = [CurveSignature(4, 4, 2)]  # h* = 2 exactly
    assert group_h_quadratic(base) == pytest.approx(2.0)
    assert group_h_quadratic(base + [CurveSignature(2, 2, 1)]) == pytest.approx(2.0)
    assert group_h_quadratic(base + [CurveSignature(1.5, 2, 1)]) < 2.0


def test_group_estimate_with_profiles():
    rng = np.random.default_rng(3)
    sigs = [random_int_signature(rng, (5, 40), (1.5, 20)) for _ in range(4)]
    ps = [synth_profile(s, author_id=f"m{i}") for i, s in enumerate(sigs)]
    res = group_estimate([signature_of(p) for p in ps], ps)
    assert res.h_star_empirical == empirical_h(merge_profiles(ps))
    assert res.M_star == max(p.M for p in ps)
    assert res.N_star == sum(p.N for p in ps)
    assert res.h_star_quadratic <= res.h_star_sqrt
    assert group_estimate(sigs).h_star_empirical is None
