"""Rotational-to-translational noise ratio ``alpha = S_tau / S_F``.

For CSL noise on a cube the ratio depends only on ``beta = L / r_C`` and
``L``; for residual gas it is a fixed multiple of ``L**2``.  Rotational data
give the stronger CSL bound wherever ``alpha_CSL > alpha_gas``.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import _series
from ._csvio import parse_float, read_rows, write_rows
from .diffusion import SERIES_BETA, decay_terms, g_aux
from .physics import CslParams, CubeGeometry


class GasModel(enum.Enum):
    """Residual-gas damping regimes with their ``alpha / L**2`` coefficients."""

    INFINITE_VOLUME = ("infinite", 0.226)
    CONFINED_ENCLOSURE = ("confined", 0.04)

    @property
    def key(self) -> str:
        return self.value[0]

    @property
    def coefficient(self) -> float:
        return self.value[1]

    @classmethod
    def from_key(cls, key: str) -> "GasModel":
        for m in cls:
            if key.lower() in (m.key, m.name.lower()):
                return m
        raise ValueError(f"unknown gas model {key!r}; expected one of {[m.key for m in cls]}")


def _alpha_closed(b):
    # Noise-ratio formula with numerator and denominator multiplied by
    # exp(-beta^2/2), so only E = exp(-beta^2/4) <= 1 appears:
    #   num = -6t - 3g^2 + (t+24)g - 32 + E[8(t+8) - (t+24)g] - 2E^2(t+16)
    #   den = 6t (1-E) (g - 2 + 2E)
    # The raw form with exp(+beta^2/4) overflows near beta = 53.
    e, one_minus_e = decay_terms(b)
    g = g_aux(b)
    t = b * b
    num = -6 * t - 3 * g * g + (t + 24) * g - 32 + e * (8 * (t + 8) - (t + 24) * g) - 2 * e * e * (t + 16)
    den = 6 * t * one_minus_e * (g - 2 + 2 * e)
    return num / den


def _alpha_series(b):
    t = b * b
    return t**3 * _series.evaluate(_series.alpha_coefficients(), t)


def alpha_over_l2(beta):
    """``alpha_CSL / L**2`` as a function of ``beta``; scalar or array."""
    b = np.asarray(beta, dtype=float)
    if np.any(~(b > 0)) or np.any(~np.isfinite(b)):
        raise ValueError("beta must be positive and finite")
    flat = b.reshape(-1)
    out = np.empty_like(flat)
    small = flat < SERIES_BETA
    if np.any(small):
        out[small] = _alpha_series(flat[small])
    if np.any(~small):
        out[~small] = _alpha_closed(flat[~small])
    out = out.reshape(b.shape)
    return float(out) if out.ndim == 0 else out


def alpha_csl(beta, side):
    """CSL torque-to-force noise ratio in m^2."""
    out = alpha_over_l2(beta) * np.square(side)
    return float(out) if np.ndim(out) == 0 else out


def alpha_gas(model: GasModel, side: float) -> float:
    if not side > 0:
        raise ValueError(f"side must be > 0, got {side!r}")
    return model.coefficient * side**2


def rotational_preferred(params: CslParams, geom: CubeGeometry, model: GasModel) -> bool:
    """True when rotational noise bounds CSL more tightly than translational noise."""
    return bool(alpha_csl(geom.side / params.r_c, geom.side) > alpha_gas(model, geom.side))


# --- beta curves ------------------------------------------------------------

CURVE_HEADER = ("beta", "alpha_csl_over_l2", "alpha_conf_over_l2", "alpha_inf_over_l2")


def alpha_curve(betas) -> np.ndarray:
    """Rows of ``(beta, alpha_CSL/L^2, alpha_conf/L^2, alpha_inf/L^2)``."""
    b = np.asarray(betas, dtype=float).reshape(-1)
    out = np.empty((b.size, 4))
    out[:, 0] = b
    out[:, 1] = alpha_over_l2(b)
    out[:, 2] = GasModel.CONFINED_ENCLOSURE.coefficient
    out[:, 3] = GasModel.INFINITE_VOLUME.coefficient
    return out


def write_curve_csv(path, curve: np.ndarray):
    return write_rows(path, CURVE_HEADER, curve.tolist())


def read_curve_csv(path) -> np.ndarray:
    rows = []
    for line, row in read_rows(path, CURVE_HEADER):
        rows.append([parse_float(path, line, c, row[c]) for c in CURVE_HEADER])
    return np.array(rows, dtype=float).reshape(-1, 4)


# --- (r_C, L) grid ------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class AlphaGrid:
    """``log10(alpha_CSL / alpha_gas)`` on a log-spaced (r_C, L) grid.

    ``log10_ratio[i, j]`` belongs to ``l_axis[i]`` and ``r_c_axis[j]``.
    """

    r_c_axis: np.ndarray
    l_axis: np.ndarray
    log10_ratio: np.ndarray
    model: GasModel

    def __post_init__(self):
        if self.log10_ratio.shape != (self.l_axis.size, self.r_c_axis.size):
            raise ValueError("grid shape does not match its axes")
        if not np.all(np.isfinite(self.log10_ratio)):
            raise ValueError("grid contains non-finite entries")

    def rotational_mask(self) -> np.ndarray:
        return self.log10_ratio > 0

    def summary(self) -> dict:
        r = self.log10_ratio
        return {
            "model": self.model.key,
            "alpha_gas_over_l2": self.model.coefficient,
            "r_c_range_m": [float(self.r_c_axis[0]), float(self.r_c_axis[-1])],
            "l_range_m": [float(self.l_axis[0]), float(self.l_axis[-1])],
            "shape": [int(self.l_axis.size), int(self.r_c_axis.size)],
            "log10_ratio_min": float(r.min()),
            "log10_ratio_max": float(r.max()),
            "rotational_preferred_fraction": float(np.mean(r > 0)),
        }

    def to_csv(self, path):
        ll, rr = np.meshgrid(self.l_axis, self.r_c_axis, indexing="ij")
        rows = np.column_stack([rr.ravel(), ll.ravel(), self.log10_ratio.ravel()])
        return write_rows(path, ("r_c", "l", "log10_ratio"), rows.tolist())

    def write_summary(self, path):
        path = Path(path)
        path.write_text(json.dumps(self.summary(), indent=2) + "\n")
        return path


def alpha_grid(
    r_c_range=(1e-8, 1e-2),
    l_range=(1e-3, 1.0),
    model: GasModel = GasModel.CONFINED_ENCLOSURE,
    resolution=200,
) -> AlphaGrid:
    """Fill ``log10(alpha_CSL/alpha_gas)``; both ratios scale with ``L**2``."""
    n_rc, n_l = (resolution, resolution) if np.isscalar(resolution) else resolution
    if n_rc < 2 or n_l < 2:
        raise ValueError("resolution must be >= 2 along each axis")
    for lo, hi in (r_c_range, l_range):
        if not (0 < lo < hi):
            raise ValueError(f"range must satisfy 0 < lo < hi, got {(lo, hi)}")
    r_c = np.logspace(np.log10(r_c_range[0]), np.log10(r_c_range[1]), int(n_rc))
    l = np.logspace(np.log10(l_range[0]), np.log10(l_range[1]), int(n_l))
    b = l[:, None] / r_c[None, :]
    ratio = np.log10(alpha_over_l2(b) / model.coefficient)
    return AlphaGrid(r_c, l, ratio, model)


def read_grid_csv(path, model: GasModel) -> AlphaGrid:
    r, l, v = [], [], []
    for line, row in read_rows(path, ("r_c", "l", "log10_ratio")):
        r.append(parse_float(path, line, "r_c", row["r_c"]))
        l.append(parse_float(path, line, "l", row["l"]))
        v.append(parse_float(path, line, "log10_ratio", row["log10_ratio"]))
    l_axis = np.array(list(dict.fromkeys(l)))
    r_axis = np.array(list(dict.fromkeys(r)))
    return AlphaGrid(r_axis, l_axis, np.array(v).reshape(l_axis.size, r_axis.size), model)
