"""Naive index definitions, written independently of citecurve.empirical.

Each one scans every candidate value and applies the defining condition
literally; no early exits, no shared helpers.
"""
import math


def h_index(counts):
    # number of papers with at least n citations must reach n
    best = 0
    for n in range(0, len(counts) + 1):
        if sum(1 for c in counts if c >= n) >= n:
            best = n
    return best


def g_index(counts, cap=True):
    ordered = sorted(counts, reverse=True)
    limit = len(ordered) if cap else len(ordered) + math.isqrt(sum(ordered)) + 1
    best = 0
    for g in range(0, limit + 1):
        top = sum(ordered[:g])  # slicing past the end pads with zeros
        if top >= g * g:
            best = g
    return best


def h2_index(counts):
    ordered = sorted(counts, reverse=True)
    best = 0
    for n in range(0, len(ordered) + 1):
        if all(c >= n * n for c in ordered[:n]):
            best = n
    return best


def all_indices(counts):
    # math.sqrt is correctly rounded; x ** 0.5 can be off by an ulp
    ordered = sorted(counts, reverse=True)
    N = len(ordered)
    h = h_index(ordered)
    g = g_index(ordered)
    head = sum(ordered[i] for i in range(N) if i < h)
    tail = sum(ordered[i] for i in range(N) if i >= h)
    out = {
        "h": h,
        "g": g,
        "h2": h2_index(ordered),
        "theta": sum(ordered),
        "theta_head": head,
        "theta_tail": tail,
        "A": head / h,
        "R": math.sqrt(head),
        "e": math.sqrt(head - h * h),
        "hg": math.sqrt(h * g),
        "dc_i": sum(ordered[n] - h for n in range(h)) / h,
        "h_prime": math.sqrt((head - h * h) / tail) * h if tail else None,
        "dc_o": sum(h - ordered[n] for n in range(h, N)) / (N - h) if N > h else None,
    }
    return out


def rel(a, b):
    return abs(a - b) / max(abs(b), 1e-300)


def log_ratio(x, y):
    return math.log(x / y)
