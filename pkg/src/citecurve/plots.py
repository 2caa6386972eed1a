"""Standalone SVG output for comparison scatters and histograms.

Output is plain text built with fixed number formatting, so identical input
always produces identical bytes.
"""
from __future__ import annotations

import os
from xml.sax.saxutils import escape

from .errors import IoError

__all__ = ["scatter_svg", "emit_scatter_svg", "histogram_svg", "emit_histogram_svg"]

WIDTH, HEIGHT = 480, 480
MARGIN = 56


def _fmt(v):
    return f"{v:.2f}"


def _header(title):
    return [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" '
        f'height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">',
        f"<title>{escape(title)}</title>",
        '<rect x="0" y="0" width="100%" height="100%" fill="white"/>',
    ]


def _axes(xmax, ymax, xlabel, ylabel):
    x0, y0 = MARGIN, HEIGHT - MARGIN
    x1, y1 = WIDTH - MARGIN // 2, MARGIN // 2
    out = [
        f'<line class="axis" x1="{x0}" y1="{y0}" x2="{x1}" y2="{y0}" stroke="black"/>',
        f'<line class="axis" x1="{x0}" y1="{y0}" x2="{x0}" y2="{y1}" stroke="black"/>',
        f'<text x="{(x0 + x1) // 2}" y="{HEIGHT - 12}" text-anchor="middle" '
        f'font-size="13">{escape(xlabel)}</text>',
        f'<text x="16" y="{(y0 + y1) // 2}" text-anchor="middle" font-size="13" '
        f'transform="rotate(-90 16 {(y0 + y1) // 2})">{escape(ylabel)}</text>',
        f'<text x="{x1}" y="{y0 + 16}" text-anchor="end" font-size="11">{xmax:.4g}</text>',
        f'<text x="{x0 - 4}" y="{y1 + 4}" text-anchor="end" font-size="11">{ymax:.4g}</text>',
        f'<text x="{x0 - 4}" y="{y0 + 16}" text-anchor="end" font-size="11">0</text>',
    ]
    return out


def scatter_svg(series, fit=None) -> str:
    """Empirical (x) against approximate (y), with y=x and the fitted line."""
    if not series.points:
        raise IoError(f"series {series.index_name!r} has no points to plot")
    top = max(max(p[0], p[1]) for p in series.points)
    top = top * 1.05 if top > 0 else 1.0
    x0, y0 = MARGIN, HEIGHT - MARGIN
    span_x = WIDTH - MARGIN // 2 - x0
    span_y = y0 - MARGIN // 2

    def px(v):
        return x0 + span_x * v / top

    def py(v):
        return y0 - span_y * v / top

    name = series.index_name
    lines = _header(f"{name}: approximate vs empirical")
    lines += _axes(top, top, f"empirical {name}", f"approximate {name}")
    lines.append(
        f'<line class="diagonal" x1="{_fmt(px(0))}" y1="{_fmt(py(0))}" '
        f'x2="{_fmt(px(top))}" y2="{_fmt(py(top))}" stroke="gray" stroke-dasharray="4 3"/>'
    )
    if fit is not None:
        # clip the fitted line to the plotting square
        xe = top if fit.gradient <= 1 else top / fit.gradient
        lines.append(
            f'<line class="fit" x1="{_fmt(px(0))}" y1="{_fmt(py(0))}" '
            f'x2="{_fmt(px(xe))}" y2="{_fmt(py(fit.gradient * xe))}" stroke="red"/>'
        )
        lines.append(
            f'<text x="{MARGIN + 8}" y="{MARGIN // 2 + 14}" font-size="12">'
            f"gradient {fit.gradient:.3f}, R2 {fit.r_squared:.3f}, n {fit.n_points}</text>"
        )
    for emp, est, aid in series.points:
        lines.append(
            f'<circle class="point" cx="{_fmt(px(emp))}" cy="{_fmt(py(est))}" r="3" '
            f'fill="steelblue"><title>{escape(str(aid))}</title></circle>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def histogram_svg(bins, label="value") -> str:
    if not bins:
        raise IoError("no bins to plot")
    lo, hi = bins[0][0], bins[-1][1]
    peak = max(b[2] for b in bins) or 1
    x0, y0 = MARGIN, HEIGHT - MARGIN
    span_x = WIDTH - MARGIN // 2 - x0
    span_y = y0 - MARGIN // 2
    width = span_x / len(bins)
    lines = _header(f"histogram of {label}")
    lines += _axes(hi, peak, label, "count")
    lines.append(f'<text x="{x0}" y="{y0 + 16}" font-size="11">{lo:.4g}</text>')
    for i, (_, _, count) in enumerate(bins):
        height = span_y * count / peak
        lines.append(
            f'<rect class="bar" x="{_fmt(x0 + i * width)}" y="{_fmt(y0 - height)}" '
            f'width="{_fmt(width)}" height="{_fmt(height)}" fill="steelblue" stroke="white"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _write(text, path):
    try:
        with open(os.fspath(path), "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}") from exc


def emit_scatter_svg(series, fit, path) -> None:
    _write(scatter_svg(series, fit), path)


def emit_histogram_svg(bins, path, label="value") -> None:
    _write(histogram_svg(bins, label), path)
