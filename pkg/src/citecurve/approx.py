"""Closed-form index estimates that depend only on (M, N, h)."""
from __future__ import annotations

import math
from dataclasses import dataclass, field, fields
from typing import Dict, Optional

from .errors import CiteCurveError, DegenerateSignature, DomainError
from .model import (
    CurveSignature,
    area_full,
    area_full_asymptotic,
    area_head,
    area_tail,
    calibrate_full,
)

__all__ = [
    "ApproxReport",
    "approx_alpha",
    "approx_A",
    "approx_R",
    "approx_g",
    "approx_hg",
    "approx_e",
    "approx_h_prime",
    "approx_h_prime_simplified",
    "approx_h_prime_triangle",
    "approx_h2",
    "h2_from_theta",
    "approx_dc_i",
    "approx_dc_i_simplified",
    "approx_dc_o",
    "approx_dc_o_simplified",
    "approx_indices",
]

# g/h is assumed below this bound when linearising ln(g/h); frozen, not a knob
G_RATIO_BOUND = 4.0


def _head_factor(M, h):
    # M/(M-h) ln(M/h), which tends to 1 as M -> h
    if not M > h:
        raise DegenerateSignature(f"needs M > h, got M={M}, h={h}")
    u = (M - h) / h
    return (1 + u) * math.log1p(u) / u


def _tail_factor(N, h):
    if not N > h:
        raise DegenerateSignature(f"needs N > h, got N={N}, h={h}")
    u = (N - h) / h
    return (1 + u) * math.log1p(u) / u


def approx_alpha(sig: CurveSignature) -> float:
    """Theta / h^2 under the asymptotic area; negative when MN < e h^2."""
    return math.log(sig.M * sig.N / (sig.h**2)) - 1.0


def approx_A(sig: CurveSignature) -> float:
    return sig.h * _head_factor(sig.M, sig.h)


def approx_R(sig: CurveSignature) -> float:
    return sig.h * math.sqrt(_head_factor(sig.M, sig.h))


def _g_log(sig):
    arg = G_RATIO_BOUND * sig.M / (math.e * sig.h)
    if arg <= 1:
        raise DomainError(f"4M <= e*h for {sig}; g estimate undefined")
    return math.log(arg)


def approx_g(sig: CurveSignature) -> float:
    return sig.h * math.sqrt(_g_log(sig))


def approx_hg(sig: CurveSignature) -> float:
    return sig.h * _g_log(sig) ** 0.25


def approx_e(sig: CurveSignature) -> float:
    # F_head - h^2 = h^2 (head_factor - 1); clamp rounding noise at M ~ h
    return sig.h * math.sqrt(max(_head_factor(sig.M, sig.h) - 1.0, 0.0))


def approx_h_prime(sig: CurveSignature) -> float:
    num = _head_factor(sig.M, sig.h) - 1.0
    den = _tail_factor(sig.N, sig.h) - 1.0
    return sig.h * math.sqrt(max(num, 0.0) / den)


def approx_h_prime_simplified(sig: CurveSignature) -> float:
    """Large-M, large-N h'; fails when M or N is below e*h."""
    leh = math.log(math.e * sig.h)
    num = math.log(sig.M) - leh
    den = math.log(sig.N) - leh
    if num <= 0 or den <= 0:
        raise DomainError(f"simplified h' needs M > e*h and N > e*h, got {sig}")
    return sig.h * math.sqrt(num / den)


def approx_h_prime_triangle(sig: CurveSignature) -> float:
    if not (sig.M > sig.h and sig.N > sig.h):
        raise DegenerateSignature(f"triangle h' needs M > h and N > h, got {sig}")
    return sig.h * math.sqrt((sig.M - sig.h) / (sig.N - sig.h))


def approx_h2(sig: CurveSignature) -> float:
    """h^(2/3).

    Drops the (M - h2^2)/M correction factor, so h^2 overstates h2^3 for
    finite M.
    """
    return sig.h ** (2.0 / 3.0)


def h2_from_theta(theta: float, sig: CurveSignature) -> float:
    alpha = approx_alpha(sig)
    if alpha <= 0:
        raise DomainError(f"alpha = {alpha:g} <= 0 for {sig}")
    return (theta / alpha) ** (1.0 / 3.0)


def approx_dc_i(sig: CurveSignature) -> float:
    return sig.h * (_head_factor(sig.M, sig.h) - 1.0)


def approx_dc_i_simplified(sig: CurveSignature) -> float:
    if not sig.M > sig.h:
        raise DegenerateSignature(f"needs M > h, got {sig}")
    if sig.M < math.e * sig.h:
        raise DomainError(f"simplified dc_i is negative for M < e*h, got {sig}")
    return sig.h * max(math.log(sig.M / (math.e * sig.h)), 0.0)


def approx_dc_o(sig: CurveSignature) -> float:
    return sig.h - area_tail(sig.N, sig.h) / (sig.N - sig.h)


def approx_dc_o_simplified(sig: CurveSignature) -> float:
    if not sig.N > sig.h:
        raise DegenerateSignature(f"needs N > h, got {sig}")
    return sig.h * (1.0 - sig.h / sig.N * math.log(sig.N / (math.e * sig.h)))


@dataclass
class ApproxReport:
    """Every closed-form estimate for one signature.

    A field is None when its formula does not apply; ``reasons`` then maps
    the field name to a short reason code.
    """

    alpha: Optional[float] = None
    A: Optional[float] = None
    R: Optional[float] = None
    g: Optional[float] = None
    hg: Optional[float] = None
    e: Optional[float] = None
    h_prime: Optional[float] = None
    h_prime_simplified: Optional[float] = None
    h_prime_triangle: Optional[float] = None
    h2: Optional[float] = None
    dc_i: Optional[float] = None
    dc_i_simplified: Optional[float] = None
    dc_o: Optional[float] = None
    dc_o_simplified: Optional[float] = None
    F: Optional[float] = None
    F_asymptotic: Optional[float] = None
    F_head: Optional[float] = None
    F_tail: Optional[float] = None
    reasons: Dict[str, str] = field(default_factory=dict)

    @classmethod
    def field_names(cls):
        return [f.name for f in fields(cls) if f.name != "reasons"]

    def as_dict(self):
        return {name: getattr(self, name) for name in self.field_names()}


def reason_code(exc):
    if isinstance(exc, DegenerateSignature):
        return "degenerate_signature"
    if isinstance(exc, DomainError):
        return "outside_domain"
    return type(exc).__name__


_FORMULAS = {
    "alpha": approx_alpha,
    "A": approx_A,
    "R": approx_R,
    "g": approx_g,
    "hg": approx_hg,
    "e": approx_e,
    "h_prime": approx_h_prime,
    "h_prime_simplified": approx_h_prime_simplified,
    "h_prime_triangle": approx_h_prime_triangle,
    "h2": approx_h2,
    "dc_i": approx_dc_i,
    "dc_i_simplified": approx_dc_i_simplified,
    "dc_o": approx_dc_o,
    "dc_o_simplified": approx_dc_o_simplified,
    "F": lambda s: area_full(calibrate_full(s)),
    "F_asymptotic": area_full_asymptotic,
    "F_head": lambda s: area_head(s.M, s.h),
    "F_tail": lambda s: area_tail(s.N, s.h),
}


def approx_indices(sig: CurveSignature) -> ApproxReport:
    report = ApproxReport()
    for name, fn in _FORMULAS.items():
        try:
            setattr(report, name, fn(sig))
        except CiteCurveError as exc:
            report.reasons[name] = reason_code(exc)
    return report
