"""Linear career model: M, N and h all grow in proportion to career length t."""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateSignature, DomainError
from .model import CurveSignature

__all__ = [
    "CareerRates",
    "rates_from_snapshot",
    "project",
    "trajectory",
    "g_slope",
    "theta_head_growth_rate",
    "TRAJECTORY_INDICES",
]

TRAJECTORY_INDICES = ("g", "h2", "theta_head", "A")


@dataclass(frozen=True)
class CareerRates:
    """Per-year rates M0, N0, h0 observed at career length ``t``.

    ``h0`` is the seniority-adjusted h/t.
    """

    M0: float
    N0: float
    h0: float
    t: float


def _check_t(t):
    if not (t > 0 and math.isfinite(t)):
        raise DomainError(f"time must be positive, got {t}")


def rates_from_snapshot(sig: CurveSignature, t: float) -> CareerRates:
    _check_t(t)
    return CareerRates(sig.M / t, sig.N / t, sig.h / t, t)


def project(rates: CareerRates, t_new: float) -> CurveSignature:
    _check_t(t_new)
    return CurveSignature(rates.M0 * t_new, rates.N0 * t_new, rates.h0 * t_new)


def _head_coeff(rates):
    M0, h0 = rates.M0, rates.h0
    if not M0 > h0:
        raise DegenerateSignature(f"needs M0 > h0, got M0={M0}, h0={h0}")
    return M0 / (M0 - h0) * math.log(M0 / h0)


def g_slope(rates: CareerRates) -> float:
    arg = 4.0 * rates.M0 / (math.e * rates.h0)
    if arg <= 1:
        raise DomainError(f"4*M0 <= e*h0 ({rates}); g trajectory undefined")
    return rates.h0 * math.sqrt(math.log(arg))


def trajectory(rates: CareerRates, t_new: float, index: str) -> float:
    """Projected value of ``index`` at time ``t_new``.

    g and A grow linearly, Theta_head quadratically and h2 as t**(2/3).
    """
    _check_t(t_new)
    if index == "g":
        return g_slope(rates) * t_new
    if index == "h2":
        return (rates.h0 * t_new) ** (2.0 / 3.0)
    if index == "theta_head":
        return rates.h0**2 * _head_coeff(rates) * t_new**2
    if index == "A":
        return rates.h0 * _head_coeff(rates) * t_new
    raise ValueError(f"unknown trajectory index {index!r}; choose from {TRAJECTORY_INDICES}")


def theta_head_growth_rate(theta_head: float, t: float) -> float:
    """d(Theta_head)/dt = 2 Theta_head / t under quadratic growth."""
    _check_t(t)
    return 2.0 * theta_head / t
