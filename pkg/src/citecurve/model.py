"""Hyperbolic rank-citation model f(x) = b/(x+c) - a and its relatives.

The curve is pinned by three anchors read off a citation record: the top
count M at x=0, the number of cited papers N where the curve reaches zero,
and the h-index h where it crosses the diagonal.  Dropping one anchor
gives the head form (N -> inf) or the tail form (M -> inf).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateSignature, DomainError, InvariantViolation

__all__ = [
    "CurveSignature",
    "FullModel",
    "HeadModel",
    "TailModel",
    "PowerLawModel",
    "calibrate_full",
    "calibrate_head",
    "calibrate_tail",
    "calibrate_power_law",
    "eval_model",
    "area_full",
    "area_full_asymptotic",
    "area_head",
    "area_tail",
    "synth_profile",
]


@dataclass(frozen=True)
class CurveSignature:
    """The (M, N, h) triple.  Values are reals so projections can be fractional."""

    M: float
    N: float
    h: float

    def __post_init__(self):
        for name in ("M", "N", "h"):
            v = getattr(self, name)
            if not (isinstance(v, (int, float, np.integer, np.floating)) and math.isfinite(v)):
                raise InvariantViolation(f"{name} must be a finite real, got {v!r}")
        if self.h < 1:
            raise InvariantViolation(f"h must be >= 1, got {self.h}")
        if self.h > self.M or self.h > self.N:
            raise InvariantViolation(
                f"h={self.h} exceeds M={self.M} or N={self.N}"
            )

    def scaled(self, k: float) -> "CurveSignature":
        return CurveSignature(k * self.M, k * self.N, k * self.h)

    def as_tuple(self):
        return (self.M, self.N, self.h)


@dataclass(frozen=True)
class FullModel:
    a: float
    b: float
    c: float
    signature: CurveSignature

    def __call__(self, x):
        return eval_model(self, x)


@dataclass(frozen=True)
class HeadModel:
    b_head: float
    c_head: float
    M: float
    h: float

    def __call__(self, x):
        return eval_model(self, x)


@dataclass(frozen=True)
class TailModel:
    a_tail: float
    b_tail: float
    N: float
    h: float

    def __call__(self, x):
        return eval_model(self, x)


@dataclass(frozen=True)
class PowerLawModel:
    C: float
    lam: float

    def __call__(self, x):
        return eval_model(self, x)


def _log_ratio(top, h):
    # ln(top/h) without cancellation when top is close to h
    return math.log1p((top - h) / h)


def calibrate_full(sig: CurveSignature) -> FullModel:
    """Solve f(0)=M, f(N)=0, f(h)=h for (a, b, c)."""
    M, N, h = sig.M, sig.N, sig.h
    if not (M > h and N > h):
        raise DegenerateSignature(f"full model needs M > h and N > h, got {sig}")
    D = M * N - (M + N) * h
    if D <= 0:
        raise DegenerateSignature(
            f"M*N - (M+N)*h = {D:g} <= 0 for {sig}; no positive (a, b, c) exists"
        )
    a = M * h * h / D
    c = N * h * h / D
    b = M * N * (M - h) * (N - h) * (h / D) ** 2
    return FullModel(a, b, c, sig)


def calibrate_head(M: float, h: float) -> HeadModel:
    if not M > h:
        raise DegenerateSignature(f"head model needs M > h, got M={M}, h={h}")
    return HeadModel(M * h * h / (M - h), h * h / (M - h), M, h)


def calibrate_tail(N: float, h: float) -> TailModel:
    if not N > h:
        raise DegenerateSignature(f"tail model needs N > h, got N={N}, h={h}")
    return TailModel(h * h / (N - h), N * h * h / (N - h), N, h)


def calibrate_power_law(M: float, h: float) -> PowerLawModel:
    """Power law C/x**lam through (1, M) and (h, h).

    Only used as a baseline; ``lam = ln(M/h) / ln(h)``.
    """
    if h <= 1:
        raise DegenerateSignature(f"power-law exponent undefined for h={h} <= 1")
    if not M > h:
        raise DegenerateSignature(f"power law needs M > h, got M={M}, h={h}")
    return PowerLawModel(float(M), math.log(M / h) / math.log(h))


def eval_model(model, x):
    """Evaluate any model at ``x`` (scalar or array).

    Full and head models are defined for x >= 0; the tail and power-law
    forms have a vertical asymptote at 0 and need x > 0.
    """
    xa = np.asarray(x, dtype=float)
    if isinstance(model, (FullModel, HeadModel)):
        if np.any(xa < 0):
            raise DomainError("x must be >= 0")
    elif isinstance(model, (TailModel, PowerLawModel)):
        if np.any(xa <= 0):
            raise DomainError("x must be > 0")
    else:
        raise TypeError(f"not a citation model: {type(model).__name__}")

    if isinstance(model, FullModel):
        y = model.b / (xa + model.c) - model.a
    elif isinstance(model, HeadModel):
        y = model.b_head / (xa + model.c_head)
    elif isinstance(model, TailModel):
        y = model.b_tail / xa - model.a_tail
    else:
        y = model.C / xa**model.lam
    return float(y) if y.ndim == 0 else y


def area_full(model: FullModel) -> float:
    """Integral of f over [0, N]: b ln(1 + N/c) - a N."""
    N = model.signature.N
    return model.b * math.log1p(N / model.c) - model.a * N


def area_full_asymptotic(sig: CurveSignature) -> float:
    """h^2 ln(MN / (e h^2)), the large-M, large-N form of the total area."""
    ratio = sig.M * sig.N / (math.e * sig.h**2)
    if ratio < 1:
        raise DomainError(f"M*N < e*h^2 for {sig}; asymptotic area would be negative")
    return sig.h**2 * math.log(ratio)


def area_head(M: float, h: float) -> float:
    """Integral of the head model over [0, h]."""
    if not M > h:
        raise DegenerateSignature(f"head area needs M > h, got M={M}, h={h}")
    return M * h * h / (M - h) * _log_ratio(M, h)


def area_tail(N: float, h: float) -> float:
    """Integral of the tail model over [h, N]."""
    if not N > h:
        raise DegenerateSignature(f"tail area needs N > h, got N={N}, h={h}")
    # N h^2/(N-h) ln(N/h) - h^2, rearranged so the empty-tail limit is clean
    u = (N - h) / h
    return h * h * ((1 + u) * math.log1p(u) - u) / u


def synth_profile(sig: CurveSignature, mode: str = "full", *, noise: float = 0.0,
                  rng=None, author_id: str = "synthetic"):
    """Sample a citation profile from a calibrated curve.

    Paper ``n`` gets ``round(f(n-1))`` citations (half rounds up), floored at 1
    so every one of the ``floor(N)`` papers stays cited, with a running
    minimum keeping the counts non-increasing.  ``noise`` > 0 multiplies each
    sample by a log-normal factor of that sigma before rounding (needs ``rng``
    or seeds a fresh default generator); the first count is left at M.
    """
    from .empirical import CitationProfile

    if mode == "full":
        model = calibrate_full(sig)
    elif mode == "head":
        model = calibrate_head(sig.M, sig.h)
    else:
        raise ValueError(f"mode must be 'full' or 'head', got {mode!r}")
    n = int(math.floor(sig.N))
    x = np.arange(n, dtype=float)
    y = eval_model(model, x)
    if noise > 0:
        rng = np.random.default_rng(rng)
        factor = rng.lognormal(0.0, noise, size=n)
        factor[0] = 1.0
        y = y * factor
    counts = np.maximum(np.floor(y + 0.5), 1.0)
    counts = np.minimum.accumulate(counts).astype(int)
    return CitationProfile(author_id, tuple(int(v) for v in counts))
