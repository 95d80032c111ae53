"""Langevin simulation of the relative test-mass motion under white CSL noise.

Both channels share one form.  With coordinate ``q`` (x or phi), conjugate
momentum ``p`` (p or L) and inertia ``M`` (m or I)::

    dq/dt = 2 p / M
    dp/dt = -(M/2) omega0^2 q - gamma p + noise(t)

so that ``q'' = -omega0^2 q - gamma q' + (2/M) noise`` and the coordinate
spectrum is ``(4/M^2) S / ((omega0^2 - omega^2)^2 + gamma^2 omega^2)``.

Noise convention: ``S`` is a one-sided DNS.  The two-sided correlation is
``E[n(t) n(s)] = (S/2) delta(t - s)``, so each step adds a Gaussian kick of
standard deviation ``sqrt(S/2 * dt)`` to ``p``.  A one-sided Welch estimate
of ``kick / dt`` then reads back ``S``.

Random numbers: ``numpy.random.PCG64`` seeded through ``SeedSequence``.
Trajectory ``i`` of an ensemble with master seed ``s`` uses
``SeedSequence(s).spawn(n)[i]``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numba
import numpy as np
from scipy import signal

from .physics import Channel

MAX_STEP_RATE = 0.05
MIN_STEPS = 1000
MIN_SEGMENT_LENGTH = 64
OBSERVABLES = ("coordinate", "momentum", "acceleration")


class UnstableStep(ValueError):
    def __init__(self, message, suggested_dt):
        super().__init__(message)
        self.suggested_dt = suggested_dt


class TooShort(ValueError):
    """Series too short for the requested number of Welch segments."""


@dataclass(frozen=True)
class OscillatorConfig:
    omega0: float
    gamma: float
    inertia: float
    noise_dns: float
    channel: Channel = Channel.ROTATIONAL

    def __post_init__(self):
        for name in ("omega0", "gamma", "noise_dns"):
            v = getattr(self, name)
            if not (v >= 0 and math.isfinite(v)):
                raise ValueError(f"{name} must be >= 0 and finite, got {v!r}")
        if not (self.inertia > 0 and math.isfinite(self.inertia)):
            raise ValueError(f"inertia must be > 0, got {self.inertia!r}")

    def coordinate_psd(self, f):
        """Continuous-time one-sided coordinate PSD at frequency ``f`` (Hz)."""
        w = 2 * np.pi * np.asarray(f, dtype=float)
        with np.errstate(divide="ignore"):
            return (4.0 / self.inertia**2) * self.noise_dns / ((self.omega0**2 - w**2) ** 2 + (self.gamma * w) ** 2)


@dataclass(frozen=True, eq=False)
class Trajectory:
    dt: float
    coordinate: np.ndarray
    momentum: np.ndarray
    seed: dict
    inertia: float
    scheme: str = "symplectic"

    def __post_init__(self):
        if not self.dt > 0:
            raise ValueError("dt must be > 0")
        if not (np.all(np.isfinite(self.coordinate)) and np.all(np.isfinite(self.momentum))):
            raise FloatingPointError("trajectory diverged (non-finite samples)")

    @property
    def samples(self) -> np.ndarray:
        return np.column_stack([self.coordinate, self.momentum])

    @property
    def times(self) -> np.ndarray:
        return self.dt * np.arange(self.coordinate.size)

    def observable(self, name: str) -> np.ndarray:
        if name == "coordinate":
            return self.coordinate
        if name == "momentum":
            return self.momentum
        if name == "acceleration":
            # (2/M) dp/dt, step by step: drift plus the noise kick / dt
            return (2.0 / self.inertia) * np.diff(self.momentum) / self.dt
        raise ValueError(f"observable must be one of {OBSERVABLES}, got {name!r}")


@dataclass(frozen=True, eq=False)
class PsdEstimate:
    frequencies: np.ndarray
    values: np.ndarray
    segment_count: int
    window: dict
    observable: str = ""

    @property
    def resolution(self) -> float:
        return float(self.frequencies[1] - self.frequencies[0])

    def band_mean(self, f_lo, f_hi):
        mask = (self.frequencies >= f_lo) & (self.frequencies <= f_hi)
        if not np.any(mask):
            raise ValueError(f"no estimate bins in [{f_lo:g}, {f_hi:g}] Hz")
        return float(np.mean(self.values[mask])), int(mask.sum())


def _seed_sequence(seed) -> np.random.SeedSequence:
    if isinstance(seed, np.random.SeedSequence):
        return seed
    return np.random.SeedSequence(seed)


def _seed_record(ss: np.random.SeedSequence) -> dict:
    return {"bit_generator": "PCG64", "entropy": int(ss.entropy), "spawn_key": list(ss.spawn_key)}


def spawn_seeds(master_seed, n):
    """Independent per-trajectory streams derived from one master seed."""
    return _seed_sequence(master_seed).spawn(n)


@numba.njit(cache=True)
def _integrate(q, p, dt, omega0, gamma, inertia, kicks, symplectic, q_out, p_out):
    stiffness = 0.5 * inertia * omega0 * omega0
    velocity = 2.0 / inertia
    q_out[0] = q
    p_out[0] = p
    for n in range(kicks.shape[0]):
        if symplectic:
            p = p + (-stiffness * q - gamma * p) * dt + kicks[n]
            q = q + velocity * p * dt
        else:
            q_next = q + velocity * p * dt
            p = p + (-stiffness * q - gamma * p) * dt + kicks[n]
            q = q_next
        q_out[n + 1] = q
        p_out[n + 1] = p


def check_step(config: OscillatorConfig, duration: float, dt: float):
    if not (dt > 0 and math.isfinite(dt)):
        raise ValueError(f"dt must be > 0, got {dt!r}")
    rate = max(config.omega0, config.gamma)
    if dt * rate > MAX_STEP_RATE:
        suggested = MAX_STEP_RATE / rate
        raise UnstableStep(
            f"dt={dt:g} s gives dt*max(omega0, gamma)={dt * rate:.3g} > {MAX_STEP_RATE}; "
            f"use dt <= {suggested:.6g} s",
            suggested,
        )
    if duration < MIN_STEPS * dt:
        raise ValueError(f"duration must cover at least {MIN_STEPS} steps ({MIN_STEPS * dt:g} s)")


def simulate(
    config: OscillatorConfig,
    duration: float,
    dt: float,
    seed=0,
    scheme: str = "symplectic",
    initial=(0.0, 0.0),
) -> Trajectory:
    """Euler-Maruyama integration from ``initial = (q0, p0)``.

    ``scheme="symplectic"`` updates the momentum first and moves the
    coordinate with the new momentum.  Plain explicit Euler-Maruyama
    (``scheme="explicit"``) pumps energy into the oscillator at a rate
    ``omega0**2 * dt``, which swamps weak damping.
    """
    if scheme not in ("symplectic", "explicit"):
        raise ValueError(f"unknown scheme {scheme!r}")
    check_step(config, duration, dt)
    steps = int(round(duration / dt))
    ss = _seed_sequence(seed)
    rng = np.random.Generator(np.random.PCG64(ss))
    kicks = rng.standard_normal(steps)
    kicks *= math.sqrt(config.noise_dns / 2 * dt)
    q = np.empty(steps + 1)
    p = np.empty(steps + 1)
    _integrate(
        float(initial[0]), float(initial[1]), float(dt), float(config.omega0), float(config.gamma),
        float(config.inertia), kicks, scheme == "symplectic", q, p,
    )
    return Trajectory(dt, q, p, _seed_record(ss), config.inertia, scheme)


def simulate_ensemble(config, duration, dt, seed, n, **kwargs):
    return [simulate(config, duration, dt, s, **kwargs) for s in spawn_seeds(seed, n)]


def welch_series(x, dt, segments=32, window="hann", observable="") -> PsdEstimate:
    """One-sided averaged-periodogram PSD with 50 % overlapping segments.

    The segment length is chosen so that exactly ``segments`` segments fit.
    Density scaling divides by ``fs * sum(w**2)``, which makes the estimate
    of white noise independent of the window.
    """
    if segments < 8:
        raise ValueError(f"segments must be >= 8, got {segments}")
    x = np.asarray(x, dtype=float)
    half = x.size // (segments + 1)
    nperseg = 2 * half
    if nperseg < MIN_SEGMENT_LENGTH:
        raise TooShort(
            f"{x.size} samples cannot give {segments} segments of length >= {MIN_SEGMENT_LENGTH}"
        )
    used = x[: (segments + 1) * half]
    f, pxx = signal.welch(
        used,
        fs=1.0 / dt,
        window=window,
        nperseg=nperseg,
        noverlap=half,
        detrend="constant",
        scaling="density",
        return_onesided=True,
    )
    descriptor = {"name": str(window), "nperseg": int(nperseg), "noverlap": int(half), "scaling": "density"}
    return PsdEstimate(f, pxx, segments, descriptor, observable)


def welch_psd(traj: Trajectory, observable="coordinate", segments=32, window="hann") -> PsdEstimate:
    return welch_series(traj.observable(observable), traj.dt, segments, window, observable)


def average_estimates(estimates) -> PsdEstimate:
    """Mean of estimates from independent trajectories on a common grid."""
    first = estimates[0]
    for e in estimates[1:]:
        if not np.array_equal(e.frequencies, first.frequencies):
            raise ValueError("estimates are on different frequency grids")
    values = np.mean([e.values for e in estimates], axis=0)
    return PsdEstimate(
        first.frequencies, values, sum(e.segment_count for e in estimates), first.window, first.observable
    )


# --- transfer-function check ------------------------------------------------


@dataclass(frozen=True)
class Probe:
    frequency: float
    measured: float
    predicted: float
    bins: int

    @property
    def rel_deviation(self) -> float:
        if self.predicted == 0:
            return 0.0 if self.measured == 0 else math.inf
        return abs(self.measured / self.predicted - 1.0)


@dataclass(frozen=True)
class TransferReport:
    probes: list = field(default_factory=list)

    @property
    def max_rel_deviation(self) -> float:
        return max(p.rel_deviation for p in self.probes)

    def as_dict(self) -> dict:
        return {
            "max_rel_deviation": self.max_rel_deviation,
            "probes": [
                {
                    "frequency_hz": p.frequency,
                    "measured": p.measured,
                    "predicted": p.predicted,
                    "bins": p.bins,
                    "rel_deviation": p.rel_deviation,
                }
                for p in self.probes
            ],
        }


DEFAULT_PROBE_FACTORS = (0.3, 0.6, 1.0, 2.0, 5.0)


def default_probes(config: OscillatorConfig, dt: float):
    if config.omega0 > 0:
        f0 = config.omega0 / (2 * np.pi)
        return [k * f0 for k in DEFAULT_PROBE_FACTORS]
    nyquist = 0.5 / dt
    return [nyquist * k for k in (1e-3, 3e-3, 1e-2, 3e-2, 1e-1)]


def transfer_check(
    config: OscillatorConfig,
    estimate: PsdEstimate,
    probes=None,
    rel_halfwidth: float = 0.05,
) -> TransferReport:
    """Compare a coordinate PSD estimate with the oscillator response.

    At each probe frequency the measured and predicted spectra are averaged
    over the same bins, those within ``rel_halfwidth * f`` of the probe.
    """
    if probes is None:
        probes = default_probes(config, 1.0 / (2 * estimate.frequencies[-1]))
    out = []
    for fp in probes:
        mask = np.abs(estimate.frequencies - fp) <= rel_halfwidth * fp
        mask &= estimate.frequencies > 0
        if mask.sum() < 3:
            raise ValueError(
                f"probe {fp:g} Hz covers {int(mask.sum())} bins at resolution {estimate.resolution:g} Hz; "
                "use longer segments or a wider probe band"
            )
        f = estimate.frequencies[mask]
        out.append(Probe(float(fp), float(np.mean(estimate.values[mask])), float(np.mean(config.coordinate_psd(f))), int(mask.sum())))
    return TransferReport(out)


def recovered_noise_dns(traj: Trajectory, config: OscillatorConfig, band, segments=32, geometry=None):
    """Noise DNS read back from the acceleration spectrum in a flat band.

    Rotational trajectories go through the torque conversion of
    ``bounds.torque_dns_from_angular_accel`` (which needs ``geometry``);
    translational ones use ``S_F = (m^2 / 4) S_acc``.
    """
    from .bounds import torque_dns_from_angular_accel
    from .physics import SpectralDensity, UnitKind

    est = welch_psd(traj, "acceleration", segments)
    mask = (est.frequencies >= band[0]) & (est.frequencies <= band[1])
    if not np.any(mask):
        raise ValueError(f"no bins in band {band}")
    if config.channel is Channel.ROTATIONAL:
        if geometry is None:
            raise ValueError("rotational recovery needs the cube geometry")
        accel = SpectralDensity(est.frequencies[mask], est.values[mask], UnitKind.ANGACCEL2)
        dns = torque_dns_from_angular_accel(accel, geometry).psd
    else:
        dns = 0.25 * config.inertia**2 * est.values[mask]
    return float(np.mean(dns)), int(mask.sum())
