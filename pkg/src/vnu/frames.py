"""Similarity frame: exponents, tau <-> t maps, and the exact spectral
dilation used by the frame transforms and by the drift substep.

Variables: xi = x / t^{1/alpha}, tau = log t, omega(x,t) = (1/t) Omega(xi, tau).
gamma = 1 - beta/alpha > 0 makes the dissipation e^{tau gamma} Lambda^beta
formally perturbative as tau -> -infinity.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.signal import czt

from vnu.fields import VorticityField


@dataclass(frozen=True)
class SimilarityFrame:
    alpha: float = 1.6
    beta: float = 1.2
    q_exp: float = 1.25  # Lebesgue exponent Q in [1, 3/2)

    def __post_init__(self):
        if not (0.0 < self.beta < self.alpha < 2.0):
            raise ValueError(
                f"exponents must satisfy 0 < beta < alpha < 2, got "
                f"alpha={self.alpha}, beta={self.beta}"
            )
        if not (1.0 <= self.q_exp < 1.5):
            raise ValueError(f"Q must lie in [1, 3/2), got {self.q_exp}")

    @property
    def gamma(self) -> float:
        return 1.0 - self.beta / self.alpha

    @property
    def a0(self) -> float:
        return 8.0 / self.alpha

    @property
    def delta0(self) -> float:
        return min(self.gamma / 4.0, 0.125, self.a0 / 2.0)

    @staticmethod
    def tau_of_t(t: float) -> float:
        if t <= 0:
            raise ValueError(f"physical time must be positive, got {t}")
        return float(np.log(t))

    @staticmethod
    def t_of_tau(tau: float) -> float:
        return float(np.exp(tau))

    def length_scale(self, t: float) -> float:
        return t ** (1.0 / self.alpha)


def _czt_axis(c: np.ndarray, scale: float, L: float, axis: int) -> np.ndarray:
    """Evaluate sum_n c_n e^{i (pi/L) n (scale * x_i)} at the standard nodes
    x_i = -L + i h along the given axis (phase-exact, O(N log N))."""
    N = c.shape[axis]
    h = 2.0 * L / N
    y = np.fft.fftshift(c, axes=axis)
    n = np.arange(N) - N // 2
    shape = [1] * c.ndim
    shape[axis] = N
    y = y * np.exp(-1j * np.pi * n * scale).reshape(shape)
    W = np.exp(-1j * np.pi * scale * h / L)
    out = czt(y, m=N, w=1.0 / W, a=1.0 + 0.0j, axis=axis)
    i = np.arange(N)
    return out * (W ** (i * (N // 2))).reshape(shape)


def sample_dilated(field: VorticityField, scale: float) -> np.ndarray:
    """Real-space values of the field evaluated at scale * x on the grid."""
    L = field.grid.box_halfwidth
    tmp = _czt_axis(field.coeffs, scale, L, axis=0)
    tmp = _czt_axis(tmp, scale, L, axis=1)
    return np.real(tmp)


def dilate(field: VorticityField, scale: float, amplitude: float = 1.0) -> VorticityField:
    """Returns amplitude * field(scale * x) as a new spectral field."""
    vals = amplitude * sample_dilated(field, scale)
    return VorticityField.from_values(field.grid, vals, field.m_sym)


def physical_to_similarity(omega_phys: VorticityField, t: float,
                           frame: SimilarityFrame) -> VorticityField:
    """Omega(xi) = t * omega(t^{1/alpha} xi, t)."""
    if t <= 0:
        raise ValueError(f"t must be positive, got {t}")
    return dilate(omega_phys, frame.length_scale(t), amplitude=t)


def similarity_to_physical(omega_sim: VorticityField, t: float,
                           frame: SimilarityFrame) -> VorticityField:
    """omega(x) = (1/t) Omega(x / t^{1/alpha})."""
    if t <= 0:
        raise ValueError(f"t must be positive, got {t}")
    return dilate(omega_sim, 1.0 / frame.length_scale(t), amplitude=1.0 / t)


def drift_substep(field: VorticityField, dtau: float,
                  frame: SimilarityFrame) -> VorticityField:
    """Exact solution of d_tau Omega = (1 + xi.grad/alpha) Omega over dtau:
    Omega(xi, tau + dtau) = e^{dtau} Omega(e^{dtau/alpha} xi, tau)."""
    return dilate(field, np.exp(dtau / frame.alpha), amplitude=np.exp(dtau))
