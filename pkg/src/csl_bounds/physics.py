"""Physical quantities shared across the package.

All values are SI. Spectra are one-sided power spectral densities and always
carry a unit tag so that a force spectrum can never be fed where a torque
spectrum is expected.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np


class UnitMismatch(ValueError):
    """A spectrum or scalar carries the wrong unit kind for an operation."""


class UnitKind(enum.Enum):
    FORCE2 = "force2_per_hz"            # N^2 / Hz
    TORQUE2 = "torque2_per_hz"          # N^2 m^2 / Hz
    ANGACCEL2 = "angaccel2_per_hz"      # rad^2 s^-4 / Hz

    @property
    def si_label(self) -> str:
        return _SI_LABELS[self]


class Channel(enum.Enum):
    ROTATIONAL = "rotational"
    TRANSLATIONAL = "translational"

    @property
    def dns_kind(self) -> UnitKind:
        """Unit kind of the noise spectrum that bounds this channel."""
        return UnitKind.TORQUE2 if self is Channel.ROTATIONAL else UnitKind.FORCE2


_SI_LABELS = {
    UnitKind.FORCE2: "N^2/Hz",
    UnitKind.TORQUE2: "N^2 m^2/Hz",
    UnitKind.ANGACCEL2: "rad^2 s^-4/Hz",
}


@dataclass(frozen=True)
class PhysicalConstants:
    """Reduced Planck constant and CSL reference mass.

    ``m0`` defaults to one atomic mass unit; pass another value to probe the
    sensitivity of a bound to that convention.
    """

    hbar: float = 1.054571817e-34
    m0: float = 1.66053906660e-27

    def __post_init__(self):
        if not (self.hbar > 0 and math.isfinite(self.hbar)):
            raise ValueError(f"hbar must be positive and finite, got {self.hbar!r}")
        if not (self.m0 > 0 and math.isfinite(self.m0)):
            raise ValueError(f"m0 must be positive and finite, got {self.m0!r}")


DEFAULT_CONSTANTS = PhysicalConstants()


@dataclass(frozen=True)
class CslParams:
    """Collapse rate ``lam`` (1/s) and correlation length ``r_c`` (m)."""

    lam: float
    r_c: float

    def __post_init__(self):
        if not (self.lam >= 0 and math.isfinite(self.lam)):
            raise ValueError(f"collapse rate must be >= 0 and finite, got {self.lam!r}")
        if not (self.r_c > 0 and math.isfinite(self.r_c)):
            raise ValueError(f"r_c must be > 0 and finite, got {self.r_c!r}")


@dataclass(frozen=True)
class CubeGeometry:
    """Homogeneous cube of side ``side`` (m) and mass ``mass`` (kg)."""

    side: float
    mass: float

    def __post_init__(self):
        if not (self.side > 0 and math.isfinite(self.side)):
            raise ValueError(f"side must be > 0 and finite, got {self.side!r}")
        if not (self.mass > 0 and math.isfinite(self.mass)):
            raise ValueError(f"mass must be > 0 and finite, got {self.mass!r}")

    def moment_of_inertia(self) -> float:
        return moment_of_inertia(self)


def moment_of_inertia(geom: CubeGeometry) -> float:
    """Moment of inertia about a face-normal axis through the centre, kg m^2."""
    return geom.mass * geom.side**2 / 6.0


def beta(geom: CubeGeometry, r_c: float) -> float:
    """Dimensionless size ``L / r_C``."""
    return geom.side / r_c


@dataclass(frozen=True, eq=False)
class SpectralDensity:
    """One-sided PSD samples on a strictly increasing positive frequency grid.

    The arrays are copied and frozen on construction.
    """

    frequencies: np.ndarray
    psd: np.ndarray
    unit_kind: UnitKind

    def __post_init__(self):
        f = np.array(self.frequencies, dtype=float, copy=True).reshape(-1)
        s = np.array(self.psd, dtype=float, copy=True).reshape(-1)
        if not isinstance(self.unit_kind, UnitKind):
            raise TypeError(f"unit_kind must be a UnitKind, got {self.unit_kind!r}")
        if f.size == 0:
            raise ValueError("spectrum has no samples")
        if f.shape != s.shape:
            raise ValueError(f"frequency/psd length mismatch: {f.size} vs {s.size}")
        if not np.all(np.isfinite(f)) or not np.all(np.isfinite(s)):
            raise ValueError("spectrum contains non-finite values")
        if np.any(f <= 0):
            raise ValueError("frequencies must be > 0")
        if np.any(np.diff(f) <= 0):
            raise ValueError("frequencies must be strictly increasing")
        if np.any(s < 0):
            raise ValueError("psd values must be >= 0")
        f.flags.writeable = False
        s.flags.writeable = False
        object.__setattr__(self, "frequencies", f)
        object.__setattr__(self, "psd", s)

    def __len__(self):
        return self.frequencies.size

    def __eq__(self, other):
        if not isinstance(other, SpectralDensity):
            return NotImplemented
        return (
            self.unit_kind is other.unit_kind
            and np.array_equal(self.frequencies, other.frequencies)
            and np.array_equal(self.psd, other.psd)
        )

    __hash__ = None

    def scaled(self, factor: float, unit_kind: UnitKind) -> "SpectralDensity":
        return SpectralDensity(self.frequencies, self.psd * factor, unit_kind)

    def in_band(self, f_min: float, f_max: float) -> np.ndarray:
        """Boolean mask of samples with ``f_min <= f <= f_max``."""
        return (self.frequencies >= f_min) & (self.frequencies <= f_max)
