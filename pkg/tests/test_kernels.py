"""The compiled gather and its numpy fallback must agree bit-for-bit in
structure and to roundoff in value; the nonuniform sampler must be
phase-exact against the direct DFT sum."""

import numpy as np
import pytest

from vnu import _fallback, nufft
from vnu.kernels import BACKEND, kb_gather_2d


def _random_coeffs(N, seed, decay=None):
    rng = np.random.default_rng(seed)
    c = rng.standard_normal((N, N)) + 1j * rng.standard_normal((N, N))
    if decay is not None:
        n1 = np.fft.fftfreq(N, 1.0 / N)
        K = np.hypot(*np.meshgrid(n1, n1, indexing="ij"))
        c *= np.exp(-((K / decay) ** 2))
    return c


def _direct_eval(c, L, px, py):
    N = c.shape[0]
    q = (np.pi / L) * np.fft.fftfreq(N, 1.0 / N)
    return np.array([np.sum(c * np.exp(1j * (q[:, None] * x + q[None, :] * y)))
                     for x, y in zip(px, py)])


def test_backends_agree():
    rng = np.random.default_rng(0)
    Nf, P, W = 64, 200, 13
    fine = rng.standard_normal((Nf, Nf)) + 1j * rng.standard_normal((Nf, Nf))
    ix = rng.integers(0, Nf, size=(P, W)).astype(np.int32)
    iy = rng.integers(0, Nf, size=(P, W)).astype(np.int32)
    wx = rng.standard_normal((P, W))
    wy = rng.standard_normal((P, W))
    a = kb_gather_2d(np.ascontiguousarray(fine), ix, iy, wx, wy)
    b = _fallback.kb_gather_2d(fine, ix, iy, wx, wy)
    assert np.linalg.norm(a - b) <= 1e-12 * np.linalg.norm(b)


@pytest.mark.parametrize("decay", [None, 8.0])
def test_nufft_matches_direct_dft(decay):
    N, L = 32, 8.0
    c = _random_coeffs(N, 3, decay)
    rng = np.random.default_rng(7)
    px = rng.uniform(-L, L, 150)
    py = rng.uniform(-L, L, 150)
    direct = _direct_eval(c, L, px, py)
    fast = nufft.sample_at_points(c, L, px, py)
    assert np.linalg.norm(fast - direct) <= 1e-11 * np.linalg.norm(direct)


def test_nufft_periodic_wrap():
    N, L = 32, 4.0
    c = _random_coeffs(N, 5, decay=6.0)
    x = np.array([1.3, -2.1])
    y = np.array([0.4, 3.0])
    v0 = nufft.sample_at_points(c, L, x, y)
    v1 = nufft.sample_at_points(c, L, x + 2 * L, y - 2 * L)
    assert np.allclose(v0, v1, rtol=1e-11, atol=1e-13)


def test_backend_reported():
    assert BACKEND in ("compiled", "fallback")
