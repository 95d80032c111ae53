"""Exclusion bounds on the CSL collapse rate from measured noise spectra.

The bound is conservative: all measured noise in the band is attributed to
CSL, so ``hbar**2 * eta(lam, r_C) <= floor`` with ``floor`` the band minimum
of the spectrum.  ``eta`` is linear in ``lam``, hence
``lam_max(r_C) = floor / (hbar**2 * eta(1, r_C))``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from ._csvio import DataFormatError, parse_float, read_rows, write_rows
from .alpha import GasModel, alpha_gas
from .diffusion import eta_r_cube, eta_v_cube
from .physics import (
    DEFAULT_CONSTANTS,
    Channel,
    CslParams,
    CubeGeometry,
    PhysicalConstants,
    SpectralDensity,
    UnitKind,
    UnitMismatch,
    moment_of_inertia,
)

DEFAULT_BAND = (1e-3, 1e-2)
PSD_HEADER = ("frequency_hz", "psd_value", "unit_kind")
EXCLUSION_HEADER = ("r_c_m", "lambda_max_per_s")


class EmptyBand(ValueError):
    """No spectrum sample falls inside the requested frequency band."""


def default_r_c_grid(n=300, lo=1e-8, hi=1e-2) -> np.ndarray:
    return np.logspace(math.log10(lo), math.log10(hi), n)


_ACCEPTED_KINDS = {
    Channel.ROTATIONAL: (UnitKind.ANGACCEL2, UnitKind.TORQUE2),
    Channel.TRANSLATIONAL: (UnitKind.FORCE2,),
}


@dataclass(frozen=True)
class ExperimentRecord:
    geometry: CubeGeometry
    spectrum: SpectralDensity
    channel: Channel
    band: tuple = DEFAULT_BAND

    def __post_init__(self):
        f_min, f_max = self.band
        if not (0 < f_min <= f_max and math.isfinite(f_max)):
            raise ValueError(f"band must satisfy 0 < f_min <= f_max, got {self.band}")
        if self.spectrum.unit_kind not in _ACCEPTED_KINDS[self.channel]:
            raise UnitMismatch(
                f"{self.channel.value} channel cannot use a {self.spectrum.unit_kind.value} spectrum"
            )


def torque_dns_from_angular_accel(s_dgamma: SpectralDensity, geom: CubeGeometry) -> SpectralDensity:
    """Convert a relative angular-acceleration PSD to torque DNS: ``I**2 / 4 * S``."""
    if s_dgamma.unit_kind is not UnitKind.ANGACCEL2:
        raise UnitMismatch(f"expected {UnitKind.ANGACCEL2.value}, got {s_dgamma.unit_kind.value}")
    inertia = moment_of_inertia(geom)
    return s_dgamma.scaled(0.25 * inertia**2, UnitKind.TORQUE2)


def channel_spectrum(record: ExperimentRecord) -> SpectralDensity:
    """The record's spectrum expressed as torque or force DNS."""
    if record.spectrum.unit_kind is UnitKind.ANGACCEL2:
        return torque_dns_from_angular_accel(record.spectrum, record.geometry)
    return record.spectrum


def dns_floor(record: ExperimentRecord) -> float:
    """Minimum torque/force DNS inside the record's band."""
    spec = channel_spectrum(record)
    mask = spec.in_band(*record.band)
    if not np.any(mask):
        raise EmptyBand(
            f"no samples in band [{record.band[0]:g}, {record.band[1]:g}] Hz "
            f"(spectrum covers [{spec.frequencies[0]:g}, {spec.frequencies[-1]:g}] Hz)"
        )
    return float(np.min(spec.psd[mask]))


def unit_dns(channel: Channel, geom: CubeGeometry, r_c: float, consts: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    """``hbar**2 * eta`` at unit collapse rate."""
    params = CslParams(1.0, r_c)
    eta = eta_r_cube(params, geom, consts) if channel is Channel.ROTATIONAL else eta_v_cube(params, geom, consts)
    return consts.hbar**2 * eta


def lambda_max_from_floor(
    floor: float,
    channel: Channel,
    geom: CubeGeometry,
    r_c: float,
    consts: PhysicalConstants = DEFAULT_CONSTANTS,
) -> float:
    if not r_c > 0:
        raise ValueError(f"r_c must be > 0, got {r_c!r}")
    return floor / unit_dns(channel, geom, r_c, consts)


def lambda_max(record: ExperimentRecord, r_c: float, consts: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    """Largest collapse rate (1/s) compatible with the record at ``r_c``."""
    return lambda_max_from_floor(dns_floor(record), record.channel, record.geometry, r_c, consts)


@dataclass(frozen=True, eq=False)
class ExclusionCurve:
    r_c: np.ndarray
    lambda_max: np.ndarray
    channel: Channel
    dns_floor: float
    floor_kind: UnitKind
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        r = np.array(self.r_c, dtype=float).reshape(-1)
        lam = np.array(self.lambda_max, dtype=float).reshape(-1)
        if r.shape != lam.shape or r.size == 0:
            raise ValueError("r_c and lambda_max must be equal-length, non-empty")
        if np.any(np.diff(r) <= 0):
            raise ValueError("r_c must be strictly increasing")
        if not np.all(np.isfinite(lam)) or np.any(lam <= 0):
            raise ValueError("lambda_max must be positive and finite everywhere")
        r.flags.writeable = False
        lam.flags.writeable = False
        object.__setattr__(self, "r_c", r)
        object.__setattr__(self, "lambda_max", lam)

    def __eq__(self, other):
        if not isinstance(other, ExclusionCurve):
            return NotImplemented
        return (
            np.array_equal(self.r_c, other.r_c)
            and np.array_equal(self.lambda_max, other.lambda_max)
            and self.channel is other.channel
            and self.dns_floor == other.dns_floor
            and self.floor_kind is other.floor_kind
        )

    __hash__ = None

    def lambda_at(self, r_c: float) -> float:
        """Log-log interpolation of the curve; ``r_c`` must lie on the grid span."""
        if not (self.r_c[0] <= r_c <= self.r_c[-1]):
            raise ValueError(f"r_c={r_c:g} outside curve range [{self.r_c[0]:g}, {self.r_c[-1]:g}]")
        return float(10 ** np.interp(math.log10(r_c), np.log10(self.r_c), np.log10(self.lambda_max)))

    def excludes(self, lam: float, r_c: float) -> bool:
        return lam > self.lambda_at(r_c)


def exclusion_curve(
    record: ExperimentRecord,
    r_c_grid=None,
    consts: PhysicalConstants = DEFAULT_CONSTANTS,
    source: str = "",
) -> ExclusionCurve:
    grid = default_r_c_grid() if r_c_grid is None else np.asarray(r_c_grid, dtype=float)
    if np.any(grid <= 0) or np.any(np.diff(grid) <= 0):
        raise ValueError("r_c grid must be positive and strictly increasing")
    floor = dns_floor(record)
    lam = np.array([lambda_max_from_floor(floor, record.channel, record.geometry, r, consts) for r in grid])
    meta = {
        "source": source,
        "channel": record.channel.value,
        "geometry": {"side_m": record.geometry.side, "mass_kg": record.geometry.mass},
        "band_hz": list(record.band),
        "dns_floor": floor,
        "dns_floor_unit": record.channel.dns_kind.si_label,
        "dns_floor_3sf": f"{floor:.3g}",
        "constants": {"hbar": consts.hbar, "m0": consts.m0},
    }
    return ExclusionCurve(grid, lam, record.channel, floor, record.channel.dns_kind, meta)


def converted_torque_check(force_floor: float, geom: CubeGeometry, model: GasModel) -> float:
    """Torque DNS predicted from a force DNS if residual gas dominated both."""
    if not force_floor >= 0:
        raise ValueError(f"force floor must be >= 0, got {force_floor!r}")
    return alpha_gas(model, geom.side) * force_floor


# --- file formats -------------------------------------------------------------


def _parse_kind(path, line, text):
    squared = text.endswith("_sqrt")
    base = text[: -len("_sqrt")] if squared else text
    try:
        return UnitKind(base), squared
    except ValueError:
        accepted = [k.value for k in UnitKind] + [k.value + "_sqrt" for k in UnitKind]
        raise DataFormatError(f"{path}:{line}: unknown unit_kind {text!r}; expected one of {accepted}") from None


def read_psd_csv(path) -> SpectralDensity:
    """Read a ``frequency_hz,psd_value,unit_kind`` file.

    Amplitude spectral densities (unit kind with ``_sqrt`` suffix) are squared.
    """
    freqs, vals = [], []
    kind = None
    for line, row in read_rows(path, PSD_HEADER):
        f = parse_float(path, line, "frequency_hz", row["frequency_hz"])
        v = parse_float(path, line, "psd_value", row["psd_value"])
        k = _parse_kind(path, line, row["unit_kind"] or "")
        if kind is None:
            kind = k
        elif k != kind:
            raise DataFormatError(f"{path}:{line}: unit_kind {row['unit_kind']!r} differs from earlier rows")
        if freqs and not f > freqs[-1]:
            raise DataFormatError(f"{path}:{line}: frequencies must be strictly increasing")
        if f <= 0 or v < 0 or not (math.isfinite(f) and math.isfinite(v)):
            raise DataFormatError(f"{path}:{line}: need frequency > 0 and psd_value >= 0")
        freqs.append(f)
        vals.append(v * v if k[1] else v)
    if kind is None:
        raise DataFormatError(f"{path}:2: no data rows")
    return SpectralDensity(np.array(freqs), np.array(vals), kind[0])


def write_psd_csv(path, spectrum: SpectralDensity):
    rows = [(f, v, spectrum.unit_kind.value) for f, v in zip(spectrum.frequencies.tolist(), spectrum.psd.tolist())]
    return write_rows(path, PSD_HEADER, rows)


def _sidecar(path) -> Path:
    path = Path(path)
    return path.with_suffix(".json")


def write_exclusion_csv(path, curve: ExclusionCurve):
    """Write the curve CSV plus a JSON metadata sidecar next to it."""
    path = write_rows(path, EXCLUSION_HEADER, zip(curve.r_c.tolist(), curve.lambda_max.tolist()))
    meta = dict(curve.metadata)
    meta.update(
        channel=curve.channel.value,
        dns_floor=curve.dns_floor,
        floor_kind=curve.floor_kind.value,
        points=int(curve.r_c.size),
    )
    _sidecar(path).write_text(json.dumps(meta, indent=2) + "\n")
    return path


def _read_pairs(path):
    r, lam = [], []
    for line, row in read_rows(path, EXCLUSION_HEADER):
        r.append(parse_float(path, line, "r_c_m", row["r_c_m"]))
        lam.append(parse_float(path, line, "lambda_max_per_s", row["lambda_max_per_s"]))
    if not r:
        raise DataFormatError(f"{path}:2: no data rows")
    return np.array(r), np.array(lam)


def read_exclusion_csv(path) -> ExclusionCurve:
    r, lam = _read_pairs(path)
    side = _sidecar(path)
    if not side.exists():
        raise DataFormatError(f"{side}: metadata sidecar missing")
    meta = json.loads(side.read_text())
    return ExclusionCurve(
        r,
        lam,
        Channel(meta["channel"]),
        float(meta["dns_floor"]),
        UnitKind(meta["floor_kind"]),
        meta,
    )


def read_overlay_csv(path):
    """Literature bound in the exclusion CSV schema; returned as ``(r_c, lam)``.

    Overlays are plotted as given and never recomputed.
    """
    r, lam = _read_pairs(path)
    if np.any(np.diff(r) <= 0):
        raise DataFormatError(f"{path}: r_c_m must be strictly increasing")
    return r, lam


def write_overlay_merged(path, curves: dict):
    """Long-format ``curve,r_c_m,lambda_max_per_s`` table for plotting."""
    rows = []
    for label, (r, lam) in curves.items():
        rows.extend((label, float(a), float(b)) for a, b in zip(r, lam))
    return write_rows(path, ("curve",) + EXCLUSION_HEADER, rows)
