"""Dataset-level comparison of empirical indices against their closed forms."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import approx
from .empirical import CitationProfile, IndexReport, empirical_indices, signature_of
from .errors import CiteCurveError, InsufficientData
from .model import area_full, area_full_asymptotic, area_head, area_tail, calibrate_full

__all__ = [
    "RegressionFit",
    "LineFit",
    "ComparisonSeries",
    "INDEX_PAIRS",
    "regress_through_origin",
    "compare_index",
    "reciprocal_diagnostic",
    "histogram",
    "author_rows",
    "analysis_rows",
]


@dataclass(frozen=True)
class RegressionFit:
    """Least-squares line through the origin with uncentered R^2."""

    gradient: float
    r_squared: float
    n_points: int


@dataclass(frozen=True)
class LineFit:
    slope: float
    intercept: float
    r_squared: float
    n_points: int


@dataclass
class ComparisonSeries:
    """(empirical, approximate, author_id) triples for one index.

    Authors whose value is undefined on either side land in ``excluded``
    (author_id -> reason) instead of ``points``.
    """

    index_name: str
    points: List[Tuple[float, float, str]] = field(default_factory=list)
    excluded: Dict[str, str] = field(default_factory=dict)

    @property
    def excluded_count(self) -> int:
        return len(self.excluded)

    def xy(self):
        return [(p[0], p[1]) for p in self.points]


# index id -> (empirical value from an IndexReport, closed form from a signature)
INDEX_PAIRS: Dict[str, Tuple[Callable[[IndexReport], Optional[float]], Callable]] = {
    "theta": (lambda r: r.theta, lambda s: area_full(calibrate_full(s))),
    "theta_asymptotic": (lambda r: r.theta, area_full_asymptotic),
    "theta_head": (lambda r: r.theta_head, lambda s: area_head(s.M, s.h)),
    "theta_tail": (lambda r: r.theta_tail, lambda s: area_tail(s.N, s.h)),
    "A": (lambda r: r.A, approx.approx_A),
    "R": (lambda r: r.R, approx.approx_R),
    "g": (lambda r: r.g, approx.approx_g),
    "hg": (lambda r: r.hg, approx.approx_hg),
    "e": (lambda r: r.e, approx.approx_e),
    "h_prime": (lambda r: r.h_prime, approx.approx_h_prime),
    "h_prime_simplified": (lambda r: r.h_prime, approx.approx_h_prime_simplified),
    "h2": (lambda r: r.h2, approx.approx_h2),
    "h2_cubed": (lambda r: r.h2**3, lambda s: s.h**2),
    "dc_i": (lambda r: r.dc_i, approx.approx_dc_i),
    "dc_i_simplified": (lambda r: r.dc_i, approx.approx_dc_i_simplified),
    "dc_o": (lambda r: r.dc_o, approx.approx_dc_o),
    "dc_o_simplified": (lambda r: r.dc_o, approx.approx_dc_o_simplified),
}


def regress_through_origin(points: Sequence[Tuple[float, float]]) -> RegressionFit:
    pts = np.asarray([(p[0], p[1]) for p in points], dtype=float).reshape(-1, 2)
    if len(pts) < 2:
        raise InsufficientData(f"need at least 2 points, got {len(pts)}")
    x, y = pts[:, 0], pts[:, 1]
    sxx = float(np.dot(x, x))
    if sxx <= 0:
        raise InsufficientData("all x values are zero")
    gradient = float(np.dot(x, y)) / sxx
    ss_res = float(np.sum((y - gradient * x) ** 2))
    ss_tot = float(np.dot(y, y))
    if ss_tot == 0:
        r2 = 1.0
    else:
        r2 = min(max(1.0 - ss_res / ss_tot, 0.0), 1.0)
    return RegressionFit(gradient, r2, len(pts))


def _profiles(dataset):
    if hasattr(dataset, "profiles"):
        dataset = dataset.profiles
    if isinstance(dataset, dict):
        return [dataset[k] for k in sorted(dataset)]
    return sorted(dataset, key=lambda p: p.author_id)


def compare_index(dataset, index_name: str):
    """Pair every author's empirical ``index_name`` with its closed form.

    Returns ``(series, fit)``; ``fit`` is None when fewer than two authors
    survive, since a regression needs at least two points.
    """
    if index_name not in INDEX_PAIRS:
        raise ValueError(f"unknown index {index_name!r}; choose from {sorted(INDEX_PAIRS)}")
    emp_of, approx_of = INDEX_PAIRS[index_name]
    series = ComparisonSeries(index_name)
    for profile in _profiles(dataset):
        aid = profile.author_id
        try:
            rep = empirical_indices(profile)
            sig = signature_of(profile)
        except CiteCurveError as exc:
            series.excluded[aid] = approx.reason_code(exc)
            continue
        emp = emp_of(rep)
        if emp is None:
            series.excluded[aid] = "undefined_empirical"
            continue
        try:
            est = approx_of(sig)
        except CiteCurveError as exc:
            series.excluded[aid] = approx.reason_code(exc)
            continue
        series.points.append((float(emp), float(est), aid))
    try:
        fit = regress_through_origin(series.xy())
    except InsufficientData:
        fit = None
    return series, fit


def reciprocal_diagnostic(profile: CitationProfile, k: int):
    """Ordinary least squares of 1/counts[n-1] on n over the top ``k`` ranks.

    The fit keeps its intercept.  Returns ``(series, LineFit)`` with
    ``series`` a list of (n, 1/count) pairs.
    """
    counts = profile.counts if isinstance(profile, CitationProfile) else tuple(profile)
    if k > len(counts):
        raise InsufficientData(f"k={k} exceeds N={len(counts)}")
    if k < 2:
        raise InsufficientData("need at least 2 ranks for a line")
    n = np.arange(1, k + 1, dtype=float)
    y = 1.0 / np.asarray(counts[:k], dtype=float)
    slope, intercept = np.polyfit(n, y, 1)
    resid = y - (slope * n + intercept)
    ss_res = float(np.dot(resid, resid))
    ss_tot = float(np.sum((y - y.mean()) ** 2))
    r2 = 1.0 if ss_tot == 0 else 1.0 - ss_res / ss_tot
    if ss_tot == 0:
        slope, intercept = 0.0, float(y.mean())
    series = [(int(i), float(v)) for i, v in zip(n, y)]
    return series, LineFit(float(slope), float(intercept), float(r2), k)


def histogram(values: Sequence[float], bin_count: int):
    """Equal-width bins over [min, max] as (lower, upper, count) triples."""
    vals = np.asarray(values, dtype=float)
    if vals.size == 0:
        raise InsufficientData("no values to bin")
    if bin_count < 1:
        raise InsufficientData(f"bin_count must be >= 1, got {bin_count}")
    counts, edges = np.histogram(vals, bins=bin_count)
    return [(float(edges[i]), float(edges[i + 1]), int(counts[i])) for i in range(bin_count)]


# analysis report: index id -> (IndexReport attribute or callable, ApproxReport field)
_REPORT_PAIRS = {
    "theta": ("theta", "F"),
    "theta_asymptotic": ("theta", "F_asymptotic"),
    "theta_head": ("theta_head", "F_head"),
    "theta_tail": ("theta_tail", "F_tail"),
    "alpha": (lambda r: r.theta / r.h**2, "alpha"),
    "A": ("A", "A"),
    "R": ("R", "R"),
    "g": ("g", "g"),
    "hg": ("hg", "hg"),
    "e": ("e", "e"),
    "h_prime": ("h_prime", "h_prime"),
    "h_prime_simplified": ("h_prime", "h_prime_simplified"),
    "h_prime_triangle": ("h_prime", "h_prime_triangle"),
    "h2": ("h2", "h2"),
    "dc_i": ("dc_i", "dc_i"),
    "dc_i_simplified": ("dc_i", "dc_i_simplified"),
    "dc_o": ("dc_o", "dc_o"),
    "dc_o_simplified": ("dc_o", "dc_o_simplified"),
}


def author_rows(author_id, signature, profile=None, cap_at_N=True):
    """Report rows for one author: signature, model parameters, every index.

    Without a profile only the closed-form column is filled.
    """
    from .ingest import ReportRow
    from .model import calibrate_head, calibrate_tail

    rows = []
    for name in ("M", "N", "h"):
        rows.append(ReportRow(author_id, name, getattr(signature, name), None))

    params = {}
    reasons = {}
    for names, make in (
        (("a", "b", "c"), lambda: calibrate_full(signature)),
        (("b_head", "c_head"), lambda: calibrate_head(signature.M, signature.h)),
        (("a_tail", "b_tail"), lambda: calibrate_tail(signature.N, signature.h)),
    ):
        try:
            m = make()
            params.update({n: getattr(m, n) for n in names})
        except CiteCurveError as exc:
            reasons.update({n: approx.reason_code(exc) for n in names})
    for name in ("a", "b", "c", "b_head", "c_head", "a_tail", "b_tail"):
        rows.append(ReportRow(author_id, name, None, params.get(name), reasons.get(name, "")))

    rep = empirical_indices(profile, cap_at_N) if profile is not None else None
    est = approx.approx_indices(signature)
    for index, (emp_key, approx_key) in _REPORT_PAIRS.items():
        emp = None
        why = []
        if rep is not None:
            emp = emp_key(rep) if callable(emp_key) else getattr(rep, emp_key)
            if emp is None:
                why.append("undefined_empirical")
        value = getattr(est, approx_key)
        if value is None:
            why.append(est.reasons.get(approx_key, "undefined"))
        rows.append(ReportRow(author_id, index,
                              None if emp is None else float(emp), value, ";".join(why)))
    return rows


def analysis_rows(dataset, cap_at_N=True):
    """Rows for every author in a Dataset, ordered by author then index id."""
    rows = []
    for aid in dataset.author_ids():
        profile = dataset.profiles.get(aid)
        rows.extend(author_rows(aid, dataset.signature(aid), profile, cap_at_N))
    return sorted(rows, key=lambda r: (r.author, r.index))
