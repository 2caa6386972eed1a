import numpy as np
import pytest

from citecurve import CurveSignature, DegenerateSignature, calibrate_full


def random_signature(rng, m_ratio=(1.05, 80.0), n_ratio=(1.05, 40.0), h_range=(1, 300)):
    """Random signature admitting a positive full-model calibration."""
    while True:
        h = float(rng.uniform(*h_range))
        M = h * float(rng.uniform(*m_ratio))
        N = h * float(rng.uniform(*n_ratio))
        sig = CurveSignature(M, N, h)
        try:
            calibrate_full(sig)
        except DegenerateSignature:
            continue
        return sig


def random_int_signature(rng, m_ratio, n_ratio, h_range=(2, 80)):
    while True:
        h = int(rng.integers(*h_range))
        M = int(round(h * rng.uniform(*m_ratio)))
        N = int(round(h * rng.uniform(*n_ratio)))
        sig = CurveSignature(M, N, h)
        try:
            calibrate_full(sig)
        except DegenerateSignature:
            continue
        return sig


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def eng():
    return CurveSignature(718, 171, 50)
