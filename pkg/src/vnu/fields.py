"""Field objects: 2D spectral vorticity/velocity and per-azimuthal-mode data.

A VorticityField is the central state object: a real scalar on the periodic
box stored as its full N x N complex spectrum.  AzimuthalField holds one
angular harmonic g_n(r) e^{in theta} sampled on the radial grid; to_modes /
from_modes convert between the two representations with spectral accuracy
(ring sampling is phase-exact through the nonuniform sampler).
"""

from __future__ import annotations

import struct
from dataclasses import dataclass

import numpy as np
from scipy.interpolate import CubicSpline

from vnu import nufft
from vnu.grid import GridSpec

MAGIC = b"VNU1"


class ResolutionError(ValueError):
    """Requested operation exceeds what the grid resolves."""


@dataclass(frozen=True)
class VorticityField:
    """Real scalar field as spectral coefficients; field(x) = sum c_n e^{i q_n x}."""

    grid: GridSpec
    coeffs: np.ndarray
    m_sym: int = 1

    @classmethod
    def from_values(cls, grid: GridSpec, values: np.ndarray, m_sym: int = 1):
        c = np.fft.fft2(values) / values.size
        return cls(grid, c, m_sym)

    @classmethod
    def zero(cls, grid: GridSpec, m_sym: int = 1):
        return cls(grid, np.zeros((grid.n, grid.n), dtype=np.complex128), m_sym)

    def values(self) -> np.ndarray:
        return np.real(np.fft.ifft2(self.coeffs) * self.coeffs.size)

    def with_coeffs(self, coeffs: np.ndarray, m_sym: int | None = None):
        return VorticityField(self.grid, coeffs, self.m_sym if m_sym is None else m_sym)

    def hermitian_residual(self) -> float:
        """Deviation from real-valuedness, relative."""
        v = np.fft.ifft2(self.coeffs) * self.coeffs.size
        n = np.linalg.norm(v)
        return float(np.linalg.norm(v.imag) / n) if n > 0 else 0.0

    def mean(self) -> float:
        return float(self.coeffs[0, 0].real)

    def __add__(self, other: "VorticityField"):
        return self.with_coeffs(self.coeffs + other.coeffs)

    def __sub__(self, other: "VorticityField"):
        return self.with_coeffs(self.coeffs - other.coeffs)

    def __mul__(self, a: float):
        return self.with_coeffs(self.coeffs * a)

    __rmul__ = __mul__


@dataclass(frozen=True)
class VelocityField:
    """Divergence-free velocity, two real components in spectral form."""

    grid: GridSpec
    coeffs_x: np.ndarray
    coeffs_y: np.ndarray

    @classmethod
    def zero(cls, grid: GridSpec):
        z = np.zeros((grid.n, grid.n), dtype=np.complex128)
        return cls(grid, z, z.copy())

    def values(self):
        n2 = self.coeffs_x.size
        ux = np.real(np.fft.ifft2(self.coeffs_x) * n2)
        uy = np.real(np.fft.ifft2(self.coeffs_y) * n2)
        return ux, uy

    def max_speed(self) -> float:
        ux, uy = self.values()
        return float(np.sqrt(ux**2 + uy**2).max())

    def divergence_residual(self) -> float:
        QX, QY = self.grid.wavenumber_mesh()
        div = 1j * QX * self.coeffs_x + 1j * QY * self.coeffs_y
        mag = np.linalg.norm(self.coeffs_x) + np.linalg.norm(self.coeffs_y)
        return float(np.linalg.norm(div) / mag) if mag > 0 else 0.0

    def __add__(self, other: "VelocityField"):
        return VelocityField(self.grid, self.coeffs_x + other.coeffs_x,
                             self.coeffs_y + other.coeffs_y)

    def __mul__(self, a: float):
        return VelocityField(self.grid, self.coeffs_x * a, self.coeffs_y * a)

    __rmul__ = __mul__


@dataclass(frozen=True)
class AzimuthalField:
    """One angular harmonic: complex g_n(r) on the radial nodes, meaning
    g_n(r) e^{in theta}.  g_n(0) = 0 for n != 0 (regularity)."""

    n: int
    r: np.ndarray
    values: np.ndarray


def to_modes(field: VorticityField, n_max: int) -> list[AzimuthalField]:
    """Azimuthal decomposition by angular quadrature on spectrally
    interpolated rings.  Returns modes n = -n_max .. n_max.

    Rings live on the radial grid (restricted to the inscribed circle).
    """
    grid = field.grid
    if n_max >= grid.n // 4:
        raise ResolutionError(f"n_max={n_max} too large for N={grid.n}")
    r = grid.radial_points()
    r = r[r <= grid.box_halfwidth]
    n_ang = max(4 * n_max, 16)
    theta = 2.0 * np.pi * np.arange(n_ang) / n_ang
    px = np.outer(r, np.cos(theta)).ravel()
    py = np.outer(r, np.sin(theta)).ravel()
    vals = nufft.sample_at_points(field.coeffs, grid.box_halfwidth, px, py)
    ring = vals.reshape(len(r), n_ang)
    spec = np.fft.fft(ring, axis=1) / n_ang  # g_n = (1/M) sum f e^{-i n theta_j}
    out = []
    for n in range(-n_max, n_max + 1):
        out.append(AzimuthalField(n, r, spec[:, n % n_ang].copy()))
    return out


def from_modes(modes: list[AzimuthalField], grid: GridSpec, m_sym: int = 1) -> VorticityField:
    """Rebuild a 2D field from angular harmonics by radial spline evaluation."""
    X, Y = grid.mesh()
    rr = np.hypot(X, Y).ravel()
    th = np.arctan2(Y, X).ravel()
    acc = np.zeros(rr.size, dtype=np.complex128)
    for mode in modes:
        r = mode.r
        g = mode.values
        if mode.n != 0:
            rs = np.concatenate([[0.0], r])
            gs = np.concatenate([[0.0], g])
        else:
            rs, gs = r, g
        sp_re = CubicSpline(rs, gs.real)
        sp_im = CubicSpline(rs, gs.imag)
        inside = rr <= r[-1]
        gv = np.zeros(rr.size, dtype=np.complex128)
        gv[inside] = sp_re(rr[inside]) + 1j * sp_im(rr[inside])
        acc += gv * np.exp(1j * mode.n * th)
    vals = acc.reshape(grid.n, grid.n)
    return VorticityField.from_values(grid, np.real(vals), m_sym)


def lift_mode(mode: AzimuthalField, grid: GridSpec, m_sym: int = 1,
              real_part: bool = True) -> VorticityField | tuple[np.ndarray, np.ndarray]:
    """2D lift of one harmonic.  With real_part=False returns the raw
    complex values array (useful to split into Re/Im basis fields)."""
    X, Y = grid.mesh()
    rr = np.hypot(X, Y)
    th = np.arctan2(Y, X)
    r = mode.r
    rs = np.concatenate([[0.0], r]) if mode.n != 0 else r
    gs = np.concatenate([[0.0], mode.values]) if mode.n != 0 else mode.values
    sp_re = CubicSpline(rs, gs.real)
    sp_im = CubicSpline(rs, gs.imag)
    inside = rr <= r[-1]
    gv = np.zeros_like(rr, dtype=np.complex128)
    gv[inside] = sp_re(rr[inside]) + 1j * sp_im(rr[inside])
    full = gv * np.exp(1j * mode.n * th)
    if real_part:
        return VorticityField.from_values(grid, np.real(full), m_sym)
    return np.real(full), np.imag(full)


def rotate(field: VorticityField, angle: float) -> VorticityField:
    """Rotate the field by the given angle about the origin (spectral
    resampling; multiples of pi/2 are exact lattice maps)."""
    grid = field.grid
    k = angle / (np.pi / 2.0)
    if abs(k - round(k)) < 1e-14:
        vals = field.values()
        rot = np.rot90(vals, k=int(round(k)) % 4)
        # rot90 pivots about the array center; our origin sits at index N/2,
        # so realign by one cyclic shift on the axes rot90 flipped
        kk = int(round(k)) % 4
        if kk in (1, 3):
            rot = np.roll(rot, 1, axis=0 if kk == 1 else 1)
        elif kk == 2:
            rot = np.roll(rot, 1, axis=(0, 1))
        return field.with_coeffs(np.fft.fft2(rot) / rot.size)
    X, Y = grid.mesh()
    c, s = np.cos(angle), np.sin(angle)
    # value at x of the rotated field = value of the original at R^{-1} x
    px = (c * X + s * Y).ravel()
    py = (-s * X + c * Y).ravel()
    vals = nufft.sample_at_points(field.coeffs, grid.box_halfwidth, px, py)
    return VorticityField.from_values(grid, np.real(vals).reshape(grid.n, grid.n),
                                      field.m_sym)


def symmetry_residual(field: VorticityField, m: int | None = None) -> float:
    """Relative L2 deviation of the field from its rotation by 2 pi / m."""
    m = field.m_sym if m is None else m
    if m <= 1:
        return 0.0
    rot = rotate(field, 2.0 * np.pi / m)
    n = np.linalg.norm(field.coeffs)
    return float(np.linalg.norm(rot.coeffs - field.coeffs) / n) if n > 0 else 0.0


def symmetrize(field: VorticityField, m: int) -> VorticityField:
    """Average over the rotation group of order m (projection onto L^2_m)."""
    acc = field.coeffs.copy()
    for k in range(1, m):
        acc = acc + rotate(field, 2.0 * np.pi * k / m).coeffs
    return VorticityField(field.grid, acc / m, m)


def random_smooth_field(grid: GridSpec, m_sym: int = 1, seed: int = 0,
                        n_harmonics: int = 2, sigma: float = 0.42,
                        include_radial: bool = True) -> VorticityField:
    """Random smooth compactly-concentrated mean-zero vorticity.

    Built from entire functions Re[a (x+iy)^n] p(r^2) exp(-r^2/sigma^2) so the
    spectrum decays like a Gaussian: fully resolved on any grid with
    q_max * sigma / 2 >~ 5.  All angular content sits in multiples of m_sym.
    """
    rng = np.random.default_rng(seed)
    X, Y = grid.mesh()
    r2 = X**2 + Y**2
    Z = X + 1j * Y
    env = np.exp(-r2 / sigma**2)
    w = np.zeros_like(X)
    base = max(m_sym, 1)
    for j in range(1, n_harmonics + 1):
        n = base * j
        a = rng.standard_normal() + 1j * rng.standard_normal()
        p = 1.0 + rng.standard_normal() * r2 + 0.3 * rng.standard_normal() * r2**2
        w += np.real(a * Z**n) * p * env / sigma**n
    if include_radial:
        c = rng.standard_normal()
        w += c * (1.0 - r2 / sigma**2) * env  # zero total integral
    f = VorticityField.from_values(grid, w, m_sym)
    nrm = np.linalg.norm(f.values())
    return f.with_coeffs(f.coeffs / nrm * grid.n)


# -- snapshot binary format ------------------------------------------------
# little-endian: magic "VNU1", uint32 N, float64 L, uint32 m_sym, float64 t,
# then N*N float64 real-space samples (row-major).


def write_snapshot(field: VorticityField, t: float, path) -> None:
    vals = field.values()
    with open(path, "wb") as fh:
        fh.write(MAGIC)
        fh.write(struct.pack("<IdId", field.grid.n, field.grid.box_halfwidth,
                             field.m_sym, t))
        fh.write(vals.astype("<f8").tobytes())


def read_snapshot(path, grid: GridSpec | None = None):
    """Returns (field, t).  A GridSpec may be supplied to carry radial data."""
    with open(path, "rb") as fh:
        magic = fh.read(4)
        if magic != MAGIC:
            raise ValueError(f"bad magic {magic!r} in {path}")
        n, L, m_sym, t = struct.unpack("<IdId", fh.read(24))
        vals = np.frombuffer(fh.read(8 * n * n), dtype="<f8").reshape(n, n)
    if grid is None:
        grid = GridSpec(box_halfwidth=L, n=n)
    return VorticityField.from_values(grid, vals.copy(), m_sym), t
