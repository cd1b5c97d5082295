"""Computational grids: the periodic Cartesian box and the radial line.

The whole plane is truncated to the periodic box [-L, L]^2; all fields of
interest are concentrated near the origin (vortex support in B_2) so the
truncation error is controlled by L and is measured, not assumed.  The
radial grid on [0, Rmax] carries the per-azimuthal-mode machinery and is
mildly stretched to cluster points near r=0 and near the vortex support
boundary r=2.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

DEFAULT_TRUNCATION_TOL = 1e-8


@dataclass(frozen=True)
class GridSpec:
    """Box [-L, L]^2 with N points per axis plus a radial grid on [0, Rmax].

    N must be even and >= 32 (spectral kernels assume a symmetric mode set);
    Rmax must be at least twice the profile support radius so that compactly
    supported radial data fits strictly inside.
    """

    box_halfwidth: float = 16.0
    n: int = 256
    nr: int = 1024
    rmax: float = 4.0
    radial_stretch: bool = True
    truncation_tol: float = DEFAULT_TRUNCATION_TOL

    def __post_init__(self):
        if self.n % 2 != 0 or self.n < 32:
            raise ValueError(f"N must be even and >= 32, got {self.n}")
        if self.rmax < 4.0 - 1e-12:
            raise ValueError(
                f"Rmax must be >= 2 * profile support radius (= 4), got {self.rmax}"
            )
        if self.box_halfwidth <= 2.0:
            raise ValueError("box must contain the profile support B_2")

    # -- Cartesian box -----------------------------------------------------

    @property
    def h(self) -> float:
        return 2.0 * self.box_halfwidth / self.n

    def axis(self) -> np.ndarray:
        """1D coordinates -L + h*i, i = 0..N-1."""
        return -self.box_halfwidth + self.h * np.arange(self.n)

    def mesh(self):
        x = self.axis()
        return np.meshgrid(x, x, indexing="ij")

    def radius_mesh(self) -> np.ndarray:
        X, Y = self.mesh()
        return np.hypot(X, Y)

    def wavenumber_axis(self) -> np.ndarray:
        """Physical wavenumbers q_n = (pi/L) n in fft layout."""
        return (np.pi / self.box_halfwidth) * np.fft.fftfreq(self.n, d=1.0 / self.n)

    def wavenumber_mesh(self):
        q = self.wavenumber_axis()
        return np.meshgrid(q, q, indexing="ij")

    def wavenumber_magnitude(self) -> np.ndarray:
        QX, QY = self.wavenumber_mesh()
        return np.hypot(QX, QY)

    def dealias_mask(self) -> np.ndarray:
        """Circular 2/3-rule mask (radial cutoff keeps the retained band
        rotation-invariant, which preserves m-fold symmetry)."""
        K = self.wavenumber_magnitude()
        qmax = np.abs(self.wavenumber_axis()).max()
        return K < (2.0 / 3.0) * qmax

    @property
    def cell_area(self) -> float:
        return self.h * self.h

    # -- radial grid ---------------------------------------------------------

    def radial_points(self) -> np.ndarray:
        """Radial nodes r_1 < ... < r_Nr = Rmax (r=0 excluded; mode data
        vanishes there and operators use a ghost value at the origin)."""
        if not self.radial_stretch:
            hr = self.rmax / self.nr
            return hr * (np.arange(self.nr) + 1.0)
        # inverse-CDF stretching: higher node density near r=0 and r=2
        s = np.linspace(0.0, self.rmax, 16 * self.nr + 1)
        density = 1.0 + 1.5 * np.exp(-((s / 0.4) ** 2)) + 1.5 * np.exp(-(((s - 2.0) / 0.35) ** 2))
        cdf = np.concatenate([[0.0], np.cumsum(0.5 * (density[1:] + density[:-1]) * np.diff(s))])
        cdf /= cdf[-1]
        targets = (np.arange(self.nr) + 1.0) / self.nr
        return np.interp(targets, cdf, s)


def fornberg_weights(x0: float, xs: np.ndarray, m: int) -> np.ndarray:
    """Finite-difference weights for the m-th derivative at x0 from nodes xs.

    Classic recursion (Fornberg 1988); works on arbitrary node sets.
    """
    n = len(xs)
    if m >= n:
        raise ValueError("need more nodes than derivative order")
    c = np.zeros((n, m + 1))
    c1 = 1.0
    c4 = xs[0] - x0
    c[0, 0] = 1.0
    for i in range(1, n):
        mn = min(i, m)
        c2 = 1.0
        c5 = c4
        c4 = xs[i] - x0
        for j in range(i):
            c3 = xs[i] - xs[j]
            c2 *= c3
            if j == i - 1:
                for k in range(mn, 0, -1):
                    c[i, k] = c1 * (k * c[i - 1, k - 1] - c5 * c[i - 1, k]) / c2
                c[i, 0] = -c1 * c5 * c[i - 1, 0] / c2
            for k in range(mn, 0, -1):
                c[j, k] = (c4 * c[j, k] - k * c[j, k - 1]) / c3
            c[j, 0] = c4 * c[j, 0] / c3
        c1 = c2
    return c[:, m]


def derivative_matrix(r: np.ndarray, order: int = 1, stencil: int = 3,
                      include_origin_ghost: bool = False) -> np.ndarray:
    """Dense FD derivative matrix on an arbitrary 1D grid.

    With include_origin_ghost the stencils may use a ghost node at r=0 whose
    value is taken to be zero (regularity of azimuthal modes n != 0).
    """
    n = len(r)
    D = np.zeros((n, n))
    half = stencil // 2
    for i in range(n):
        lo = max(0, i - half)
        hi = min(n, lo + stencil)
        lo = max(0, hi - stencil)
        nodes = r[lo:hi]
        if include_origin_ghost and lo == 0:
            nodes_g = np.concatenate([[0.0], nodes])
            w = fornberg_weights(r[i], nodes_g, order)
            # ghost value is zero: drop its weight
            D[i, lo:hi] = w[1:]
        else:
            D[i, lo:hi] = fornberg_weights(r[i], nodes, order)
    return D


def trapezoid_weights(r: np.ndarray, left_edge: float | None = 0.0) -> np.ndarray:
    """Trapezoid quadrature weights on the given nodes.

    If left_edge is not None the segment [left_edge, r[0]] is included
    assuming the integrand vanishes at left_edge (triangle rule).
    """
    n = len(r)
    w = np.zeros(n)
    dr = np.diff(r)
    w[:-1] += 0.5 * dr
    w[1:] += 0.5 * dr
    if left_edge is not None:
        w[0] += 0.5 * (r[0] - left_edge)
    return w
