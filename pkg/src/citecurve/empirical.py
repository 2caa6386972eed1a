"""Citation indices computed straight from a rank-sorted citation vector."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import EmptyProfile, InvariantViolation
from .model import CurveSignature

__all__ = [
    "CitationProfile",
    "IndexReport",
    "signature_of",
    "empirical_h",
    "empirical_g",
    "empirical_h2",
    "theta_split",
    "empirical_indices",
]


@dataclass(frozen=True)
class CitationProfile:
    """An author's citation counts, most-cited first, every entry >= 1."""

    author_id: str
    counts: tuple

    def __post_init__(self):
        counts = tuple(int(c) for c in self.counts)
        object.__setattr__(self, "counts", counts)
        for i, c in enumerate(counts):
            if c < 1:
                raise InvariantViolation(f"{self.author_id}: count {c} at rank {i + 1} is not positive")
            if i and c > counts[i - 1]:
                raise InvariantViolation(f"{self.author_id}: counts not sorted at rank {i + 1}")

    @classmethod
    def from_counts(cls, counts: Iterable[int], author_id: str = "") -> "CitationProfile":
        """Normalize raw per-paper counts: drop uncited papers, sort descending."""
        kept = sorted((int(c) for c in counts if int(c) > 0), reverse=True)
        return cls(author_id, tuple(kept))

    def __len__(self):
        return len(self.counts)

    @property
    def M(self) -> int:
        return self.counts[0] if self.counts else 0

    @property
    def N(self) -> int:
        return len(self.counts)


@dataclass(frozen=True)
class IndexReport:
    """Empirical index values for one author.

    ``h_prime`` is None when the tail is empty and ``dc_o`` is None when
    N == h; both are undefined there rather than zero.
    """

    author_id: str
    M: int
    N: int
    h: int
    g: int
    h2: int
    theta: int
    theta_head: int
    theta_tail: int
    A: float
    R: float
    e: float
    hg: float
    h_prime: Optional[float]
    dc_i: float
    dc_o: Optional[float]


def _counts(profile) -> Sequence[int]:
    return profile.counts if isinstance(profile, CitationProfile) else tuple(profile)


def empirical_h(profile) -> int:
    """Largest n with counts[n-1] >= n (0 for an empty profile)."""
    h = 0
    for n, c in enumerate(_counts(profile), start=1):
        if c < n:
            break
        h = n
    return h


def empirical_g(profile, cap_at_N: bool = True) -> int:
    """Largest g whose top-g citations sum to at least g**2.

    With ``cap_at_N=False`` ranks past N count as zero-citation papers, so g
    can exceed the number of cited papers.
    """
    counts = _counts(profile)
    total = 0
    g = 0
    for n, c in enumerate(counts, start=1):
        total += c
        if total < n * n:
            return g
        g = n
    if not cap_at_N:
        g = max(g, math.isqrt(total))
    return g


def empirical_h2(profile) -> int:
    """Largest n with counts[n-1] >= n**2."""
    h2 = 0
    for n, c in enumerate(_counts(profile), start=1):
        if c < n * n:
            break
        h2 = n
    return h2


def theta_split(profile):
    """(total, head, tail) citation sums, with the head being the top h papers."""
    counts = _counts(profile)
    h = empirical_h(counts)
    head = sum(counts[:h])
    tail = sum(counts[h:])
    return head + tail, head, tail


def signature_of(profile: CitationProfile) -> CurveSignature:
    counts = _counts(profile)
    if not counts:
        raise EmptyProfile("cannot take the signature of an empty profile")
    return CurveSignature(counts[0], len(counts), empirical_h(counts))


def empirical_indices(profile: CitationProfile, cap_at_N: bool = True) -> IndexReport:
    counts = _counts(profile)
    if not counts:
        raise EmptyProfile("no cited papers")
    author = profile.author_id if isinstance(profile, CitationProfile) else ""
    N = len(counts)
    h = empirical_h(counts)
    g = empirical_g(counts, cap_at_N=cap_at_N)
    theta, head, tail = theta_split(counts)
    excess = head - h * h
    return IndexReport(
        author_id=author,
        M=counts[0],
        N=N,
        h=h,
        g=g,
        h2=empirical_h2(counts),
        theta=theta,
        theta_head=head,
        theta_tail=tail,
        A=head / h,
        R=math.sqrt(head),
        e=math.sqrt(excess),
        hg=math.sqrt(h * g),
        h_prime=math.sqrt(excess / tail) * h if tail > 0 else None,
        dc_i=excess / h,
        dc_o=(h * (N - h) - tail) / (N - h) if N > h else None,
    )


def random_profile(rng: np.random.Generator, max_papers: int = 60, max_count: int = 500,
                   author_id: str = "") -> CitationProfile:
    """A random non-empty profile, handy for property checks and demos."""
    n = int(rng.integers(1, max_papers + 1))
    top = int(rng.integers(1, max_count + 1))
    raw = rng.integers(1, top + 1, size=n)
    return CitationProfile.from_counts(raw.tolist(), author_id)
