"""Nonlocal operators on the periodic box.

Fractional Laplacian as the radial spectral multiplier |q|^beta, Biot-Savart
velocity recovery with mean-zero gauge, dealiased advection, the rotation
generator d_theta, and the sign-diagnostic pairings used by the gradient
energy estimates.
"""

from __future__ import annotations

import numpy as np

from vnu.fields import VelocityField, VorticityField


def frac_laplacian(field: VorticityField, beta: float) -> VorticityField:
    """Lambda^beta: multiplier |q|^beta.  Requires 0 < beta <= 2."""
    if not 0.0 < beta <= 2.0:
        raise ValueError(f"beta must lie in (0, 2], got {beta}")
    K = field.grid.wavenumber_magnitude()
    return field.with_coeffs(field.coeffs * K**beta)


def biot_savart_2d(field: VorticityField) -> VelocityField:
    """U = grad-perp of the inverse Laplacian; zero mode gauged to zero.

    curl(U) reproduces the field minus its box mean.
    """
    grid = field.grid
    QX, QY = grid.wavenumber_mesh()
    K2 = QX**2 + QY**2
    K2[0, 0] = 1.0
    psi = -field.coeffs / K2
    psi[0, 0] = 0.0
    # u = (-d_y psi, d_x psi)
    return VelocityField(grid, -1j * QY * psi, 1j * QX * psi)


def curl(vel: VelocityField) -> VorticityField:
    QX, QY = vel.grid.wavenumber_mesh()
    return VorticityField(vel.grid, 1j * QX * vel.coeffs_y - 1j * QY * vel.coeffs_x)


def gradient(field: VorticityField):
    """Spectral gradient; returns the two real-space component arrays."""
    QX, QY = field.grid.wavenumber_mesh()
    n2 = field.coeffs.size
    gx = np.real(np.fft.ifft2(1j * QX * field.coeffs) * n2)
    gy = np.real(np.fft.ifft2(1j * QY * field.coeffs) * n2)
    return gx, gy


def d_theta(field: VorticityField) -> VorticityField:
    """Rotation generator (x-perp . grad) = x d_y - y d_x."""
    X, Y = field.grid.mesh()
    gx, gy = gradient(field)
    return VorticityField.from_values(field.grid, X * gy - Y * gx, field.m_sym)


def commutation_residual(field: VorticityField, beta: float) -> float:
    """Relative size of d_theta Lambda^beta - Lambda^beta d_theta.

    Normalized by the larger of the two composed-output norms (the natural
    relative error of the quantities being compared).
    """
    a = d_theta(frac_laplacian(field, beta))
    b = frac_laplacian(d_theta(field), beta)
    scale = max(np.linalg.norm(a.coeffs), np.linalg.norm(b.coeffs))
    if scale == 0.0:
        return 0.0
    return float(np.linalg.norm(a.coeffs - b.coeffs) / scale)


def advect(velocity: VelocityField, field: VorticityField) -> VorticityField:
    """u . grad(omega) with circular 2/3-rule dealiasing; zero box mean."""
    grid = field.grid
    ux, uy = velocity.values()
    gx, gy = gradient(field)
    prod = ux * gx + uy * gy
    c = np.fft.fft2(prod) / prod.size
    c *= grid.dealias_mask()
    c[0, 0] = 0.0  # transport of a divergence-free flow preserves the mean
    return VorticityField(grid, c, field.m_sym)


def box_integral(field_values: np.ndarray, grid) -> float:
    return float(np.sum(field_values) * grid.cell_area)


def cordoba_pairing(field: VorticityField, beta: float, p: float) -> float:
    """int Lambda^beta(Omega) |Omega|^{p-2} Omega dxi.

    Nonnegative for smooth fields (fractional dissipation is dissipative in
    L^p); used as a sign diagnostic.
    """
    lam = frac_laplacian(field, beta).values()
    w = field.values()
    integrand = lam * np.abs(w) ** (p - 2.0) * w
    return box_integral(integrand, field.grid)


def gradient_extension_pairing(field: VorticityField, beta: float) -> float:
    """sum_i int Lambda^beta(d_i Omega) |grad Omega|^2 d_i Omega dxi.

    Sign diagnostic for the p=4 gradient estimate's dissipation term.
    """
    grid = field.grid
    QX, QY = grid.wavenumber_mesh()
    K = np.hypot(QX, QY)
    n2 = field.coeffs.size
    dx_c = 1j * QX * field.coeffs
    dy_c = 1j * QY * field.coeffs
    gx = np.real(np.fft.ifft2(dx_c) * n2)
    gy = np.real(np.fft.ifft2(dy_c) * n2)
    lx = np.real(np.fft.ifft2(K**beta * dx_c) * n2)
    ly = np.real(np.fft.ifft2(K**beta * dy_c) * n2)
    g2 = gx**2 + gy**2
    return box_integral(lx * g2 * gx + ly * g2 * gy, grid)


def velocity_sup_bound_ratio(field: VorticityField, q_exp: float) -> float:
    """||BS[w]||_inf / (||w||_{L^Q} + ||w||_{L^4}): the measured constant in
    the convolution bound for velocities of X-regular vorticities."""
    from vnu.norms import lebesgue_norm

    vel = biot_savart_2d(field)
    denom = lebesgue_norm(field, q_exp) + lebesgue_norm(field, 4.0)
    return vel.max_speed() / denom if denom > 0 else 0.0
