"""Nonuniform sampling of band-limited fields (type-2 NUFFT).

Evaluates a 2D Fourier series given on the periodic box [-L, L]^2 at
arbitrary points: deconvolve by a Kaiser-Bessel window, inverse FFT onto a
sigma-times-finer grid, then window-weighted gather at the points.  With
sigma = 2 and width 13 the sampling error sits near 1e-13 relative, i.e.
phase-exact for every tolerance used here.

Coefficient convention throughout the package:
    field(x) = sum_n c[n] exp(i q_n . x),  q_n = (pi/L) n,  c = fft2(values)/N^2.
"""

from __future__ import annotations

import numpy as np

from vnu import kernels

SIGMA = 2
WIDTH = 13
BETA = 2.3 * WIDTH  # KB shape parameter, standard choice for sigma = 2


def _kb_window(u: np.ndarray) -> np.ndarray:
    """I0(beta*sqrt(1-u^2)) on [-1, 1], zero outside."""
    from scipy.special import i0

    out = np.zeros_like(u)
    m = np.abs(u) < 1.0
    out[m] = i0(BETA * np.sqrt(1.0 - u[m] ** 2))
    return out


def _kb_transform(q: np.ndarray, half_width: float) -> np.ndarray:
    """Continuous Fourier transform of the KB window of support half-width T.

    phi_hat(q) = 2T sinh(sqrt(beta^2 - (qT)^2))/sqrt(...) with the analytic
    continuation sin-form past |qT| = beta.
    """
    z = (q * half_width) ** 2 - BETA**2
    out = np.empty_like(z)
    neg = z < 0
    s = np.sqrt(np.abs(z))
    out[neg] = np.sinh(s[neg]) / s[neg]
    out[~neg] = np.sinc(s[~neg] / np.pi)  # sin(s)/s
    return 2.0 * half_width * out


def sample_at_points(coeffs: np.ndarray, box_halfwidth: float,
                     px: np.ndarray, py: np.ndarray) -> np.ndarray:
    """Evaluate the Fourier series at points (px, py); returns complex values.

    Points may lie anywhere; they are interpreted periodically.
    """
    N = coeffs.shape[0]
    L = box_halfwidth
    Nf = SIGMA * N
    hf = 2.0 * L / Nf
    T = 0.5 * WIDTH * hf

    n1 = np.fft.fftfreq(N, d=1.0 / N)  # integer mode numbers
    q1 = (np.pi / L) * n1
    dec = _kb_transform(q1, T)
    d = coeffs / np.outer(dec, dec)

    # zero-pad into the fine layout, with the (-1)^(kx+ky) phase carrying
    # the x = -L grid origin
    phase = (-1.0) ** n1
    d = d * np.outer(phase, phase)
    pad = np.zeros((Nf, Nf), dtype=np.complex128)
    idx = np.asarray(n1, dtype=int) % Nf
    pad[np.ix_(idx, idx)] = d
    fine = np.fft.ifft2(pad) * Nf * Nf

    # gather
    half = WIDTH // 2
    tx = (np.asarray(px, dtype=float) + L) / hf
    ty = (np.asarray(py, dtype=float) + L) / hf
    cx = np.rint(tx).astype(np.int64)
    cy = np.rint(ty).astype(np.int64)
    offsets = np.arange(-half, half + 1)
    ix = ((cx[:, None] + offsets[None, :]) % Nf).astype(np.int32)
    iy = ((cy[:, None] + offsets[None, :]) % Nf).astype(np.int32)
    ux = (tx[:, None] - (cx[:, None] + offsets[None, :])) * hf / T
    uy = (ty[:, None] - (cy[:, None] + offsets[None, :])) * hf / T
    wx = _kb_window(ux)
    wy = _kb_window(uy)

    fine = np.ascontiguousarray(fine)
    ix = np.ascontiguousarray(ix)
    iy = np.ascontiguousarray(iy)
    wx = np.ascontiguousarray(wx)
    wy = np.ascontiguousarray(wy)
    vals = kernels.kb_gather_2d(fine, ix, iy, wx, wy)
    return vals * hf * hf
