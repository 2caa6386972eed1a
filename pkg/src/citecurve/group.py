"""Group h-index: merge member records, or estimate from member (M, h) alone.

Each member's head is modelled by b_i/(x + c_i).  If member i contributes
x_i papers with at least h* citations, then h* = b_i/(x_i + c_i) for every
i and sum(x_i) = h*, which is a quadratic in h*.  Dropping the sum of c_i
leaves the square-root estimate.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .empirical import CitationProfile, empirical_h
from .errors import DegenerateSignature, EmptyGroup
from .model import CurveSignature, calibrate_head

__all__ = [
    "GroupResult",
    "merge_profiles",
    "group_h_quadratic",
    "group_h_sqrt",
    "group_estimate",
]


@dataclass(frozen=True)
class GroupResult:
    M_star: float
    N_star: float
    h_star_empirical: Optional[int]
    h_star_quadratic: float
    h_star_sqrt: float


def merge_profiles(profiles: Sequence[CitationProfile], author_id: str = "group") -> CitationProfile:
    """Pool the papers of all members.  Publications are assumed disjoint."""
    if not profiles:
        raise EmptyGroup("no profiles to merge")
    pooled = [c for p in profiles for c in p.counts]
    return CitationProfile(author_id, tuple(sorted(pooled, reverse=True)))


def _head_terms(members):
    if not members:
        raise EmptyGroup("group has no members")
    bs, cs = [], []
    for i, sig in enumerate(members):
        try:
            hm = calibrate_head(sig.M, sig.h)
        except DegenerateSignature as exc:
            raise DegenerateSignature(f"member {i} ({sig}): {exc}") from None
        bs.append(hm.b_head)
        cs.append(hm.c_head)
    # fsum keeps the reduction independent of member order
    return math.fsum(bs), math.fsum(cs)


def group_h_quadratic(members: Sequence[CurveSignature]) -> float:
    B, C = _head_terms(members)
    return (-C + math.sqrt(C * C + 4.0 * B)) / 2.0


def group_h_sqrt(members: Sequence[CurveSignature]) -> float:
    B, _ = _head_terms(members)
    return math.sqrt(B)


def group_estimate(members: Sequence[CurveSignature],
                   profiles: Optional[Sequence[CitationProfile]] = None) -> GroupResult:
    """Both closed-form estimates, plus the merged h* when full records are given."""
    if not members:
        raise EmptyGroup("group has no members")
    h_emp = None
    if profiles is not None:
        h_emp = empirical_h(merge_profiles(profiles))
    return GroupResult(
        M_star=max(s.M for s in members),
        N_star=math.fsum(s.N for s in members),
        h_star_empirical=h_emp,
        h_star_quadratic=group_h_quadratic(members),
        h_star_sqrt=group_h_sqrt(members),
    )
