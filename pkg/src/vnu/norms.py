"""Norms and the running ledger.

The working norm is
    ||Omega||_X = ||Omega||_{L^Q ^ L^2} + ||d_theta Omega||_{L^Q ^ L^4}
                  + ||grad Omega||_{L^2 ^ L^4}
with ||.||_{A ^ B} = max of the two (equivalent to the sum up to a factor 2;
the combination is a convention, see the ledger docs).  The dissipation
quantity is ||Omega||_D^2 = int e^{s gamma} ||Lambda^{1+beta/2} Omega||^2 ds,
accumulated stepwise.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np

from vnu.fields import VorticityField
from vnu.frames import SimilarityFrame
from vnu.operators import d_theta, gradient

LEDGER_COLUMNS = ["tau", "lq", "l2", "dth_lq", "dth_l4", "grad_l2", "grad_l4",
                  "xnorm", "d2_cum", "energy", "dissip_cum", "work_cum"]


def lebesgue_norm(field: VorticityField, p: float) -> float:
    """L^p norm by the box quadrature (spectrally exact for p=2)."""
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    vals = np.abs(field.values())
    return float((np.sum(vals**p) * field.grid.cell_area) ** (1.0 / p))


def lebesgue_norm_values(vals: np.ndarray, cell_area: float, p: float) -> float:
    return float((np.sum(np.abs(vals) ** p) * cell_area) ** (1.0 / p))


def sobolev_seminorm(field: VorticityField, s: float) -> float:
    """||Lambda^s field||_{L^2} by Plancherel."""
    K = field.grid.wavenumber_magnitude()
    area = (2.0 * field.grid.box_halfwidth) ** 2
    return float(np.sqrt(area * np.sum((K ** (2.0 * s)) * np.abs(field.coeffs) ** 2)))


def intersection_norm(a: float, b: float) -> float:
    """||.||_{A ^ B} := max(||.||_A, ||.||_B)."""
    return max(a, b)


@dataclass(frozen=True)
class XNormParts:
    lq: float
    l2: float
    dth_lq: float
    dth_l4: float
    grad_l2: float
    grad_l4: float

    @property
    def total(self) -> float:
        return (intersection_norm(self.lq, self.l2)
                + intersection_norm(self.dth_lq, self.dth_l4)
                + intersection_norm(self.grad_l2, self.grad_l4))


def x_norm_parts(field: VorticityField, frame: SimilarityFrame) -> XNormParts:
    q = frame.q_exp
    area = field.grid.cell_area
    dth = d_theta(field).values()
    gx, gy = gradient(field)
    gmag = np.hypot(gx, gy)
    return XNormParts(
        lq=lebesgue_norm(field, q),
        l2=lebesgue_norm(field, 2.0),
        dth_lq=lebesgue_norm_values(dth, area, q),
        dth_l4=lebesgue_norm_values(dth, area, 4.0),
        grad_l2=lebesgue_norm_values(gmag, area, 2.0),
        grad_l4=lebesgue_norm_values(gmag, area, 4.0),
    )


def x_norm(field: VorticityField, frame: SimilarityFrame) -> float:
    return x_norm_parts(field, frame).total


def dissipation_increment(field: VorticityField, frame: SimilarityFrame,
                          tau: float, dtau: float) -> float:
    """One quadrature cell of ||.||_D^2: e^{tau gamma} ||Lambda^{1+beta/2}||^2 dtau."""
    if dtau <= 0:
        raise ValueError(f"dtau must be positive, got {dtau}")
    return float(np.exp(tau * frame.gamma)
                 * sobolev_seminorm(field, 1.0 + frame.beta / 2.0) ** 2 * dtau)


class NormLedger:
    """Time series of the norm components plus energy-budget accumulators.

    Serializes to CSV with the fixed header; cumulative D^2 must be
    nondecreasing and the xnorm column always equals the max-combination of
    its recorded components.
    """

    def __init__(self):
        self.rows: list[dict] = []

    def record(self, tau: float, parts: XNormParts, d2_cum: float,
               energy: float = 0.0, dissip_cum: float = 0.0,
               work_cum: float = 0.0) -> None:
        if self.rows and d2_cum < self.rows[-1]["d2_cum"] - 1e-15:
            raise ValueError("cumulative dissipation must be nondecreasing")
        self.rows.append({
            "tau": tau, "lq": parts.lq, "l2": parts.l2,
            "dth_lq": parts.dth_lq, "dth_l4": parts.dth_l4,
            "grad_l2": parts.grad_l2, "grad_l4": parts.grad_l4,
            "xnorm": parts.total, "d2_cum": d2_cum, "energy": energy,
            "dissip_cum": dissip_cum, "work_cum": work_cum,
        })

    def column(self, name: str) -> np.ndarray:
        return np.array([row[name] for row in self.rows])

    def to_csv(self, path) -> None:
        with open(path, "w", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=LEDGER_COLUMNS)
            writer.writeheader()
            writer.writerows(self.rows)

    @classmethod
    def from_csv(cls, path) -> "NormLedger":
        ledger = cls()
        with open(path, newline="") as fh:
            reader = csv.DictReader(fh)
            if reader.fieldnames != LEDGER_COLUMNS:
                raise ValueError(
                    f"ledger schema mismatch: {reader.fieldnames} != {LEDGER_COLUMNS}")
            for row in reader:
                ledger.rows.append({k: float(v) for k, v in row.items()})
        return ledger

    def to_csv_string(self) -> str:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=LEDGER_COLUMNS)
        writer.writeheader()
        writer.writerows(self.rows)
        return buf.getvalue()


def fit_exponential_rate(taus: np.ndarray, values: np.ndarray,
                         skip_fraction: float = 0.1):
    """Least-squares slope of log(values) vs tau, excluding the initial
    transient.  Returns (rate, intercept)."""
    taus = np.asarray(taus, dtype=float)
    values = np.asarray(values, dtype=float)
    keep = values > 0
    taus, values = taus[keep], values[keep]
    if len(taus) < 4:
        raise ValueError("window too short for a rate fit")
    i0 = int(np.floor(skip_fraction * len(taus)))
    t, v = taus[i0:], np.log(values[i0:])
    A = np.vstack([t, np.ones_like(t)]).T
    (rate, intercept), *_ = np.linalg.lstsq(A, v, rcond=None)
    return float(rate), float(intercept)
