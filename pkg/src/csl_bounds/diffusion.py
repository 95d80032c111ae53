"""CSL translational and rotational diffusion coefficients of a cube.

Two independent routes are provided:

* ``eta_v_cube`` / ``eta_r_cube`` evaluate the cube closed forms, with an
  exact rational series below ``beta = 3`` where the closed forms cancel.
* ``eta_numeric`` integrates the defining k-space integrals by brute force on
  a tensor-product Gauss-Legendre grid, using the cuboid form factor
  ``mu(k) = m prod_i sinc(k_i L / 2)`` and its analytic derivatives.

Both return SI values: ``eta_v`` in 1/(s m^2), ``eta_r`` in 1/s.  The
corresponding white noise spectra are ``hbar**2 * eta``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numba
import numpy as np
from scipy import special

from . import _series
from .physics import (
    DEFAULT_CONSTANTS,
    Channel,
    CslParams,
    CubeGeometry,
    PhysicalConstants,
    UnitKind,
)

SQRT_PI = math.sqrt(math.pi)
SERIES_BETA = 3.0
ERF_SATURATION_BETA = 40.0


class NonConvergence(ArithmeticError):
    """Quadrature result moved by more than the tolerance under refinement."""


class QuadratureTooLarge(NonConvergence):
    """The rule needed to resolve the sinc oscillations exceeds the node budget."""


@dataclass(frozen=True)
class DiffusionPair:
    eta_v: float
    eta_r: float

    def __post_init__(self):
        if not (self.eta_v >= 0 and self.eta_r >= 0):
            raise ValueError(f"diffusion coefficients must be >= 0, got {self}")


@dataclass(frozen=True)
class QuadratureSpec:
    """Discretisation of the k-space integrals.

    The half-axis ``[0, k_max / r_C]`` is split into equal panels no wider
    than one period of ``sinc(k L / 2)**2`` (``2 pi / L``) and no wider than
    ``1 / r_C``; each panel carries ``nodes_per_panel`` Gauss-Legendre nodes.
    With ``check_convergence`` the rule is re-run with twice the nodes per
    panel and ``NonConvergence`` is raised if the two differ by more than
    ``rtol``.
    """

    nodes_per_panel: int = 8
    k_max_in_units_of_inv_rc: float = 8.0
    check_convergence: bool = True
    rtol: float = 1e-8
    octant: bool = True
    max_nodes_per_axis: int = 4096

    def __post_init__(self):
        if self.nodes_per_panel < 8:
            raise ValueError(f"nodes_per_panel must be >= 8, got {self.nodes_per_panel}")
        if not self.k_max_in_units_of_inv_rc >= 6:
            raise ValueError(
                f"k_max must be >= 6 / r_C, got {self.k_max_in_units_of_inv_rc}"
            )


def g_aux(beta):
    """``sqrt(pi) * beta * erf(beta / 2)``; accepts scalars or arrays."""
    b = np.asarray(beta, dtype=float)
    if np.any(b < 0):
        raise ValueError("beta must be >= 0")
    erf = np.where(b >= ERF_SATURATION_BETA, 1.0, special.erf(np.minimum(b, ERF_SATURATION_BETA) / 2))
    out = SQRT_PI * b * erf
    return float(out) if out.ndim == 0 else out


def decay_terms(beta):
    """Return ``(E, 1 - E)`` with ``E = exp(-beta**2 / 4)``.

    ``1 - E`` goes through ``expm1`` so it keeps full relative precision for
    small beta.  For large beta ``E`` underflows cleanly to zero; every
    formula in this package is written in terms of ``E`` rather than its
    growing reciprocal, so nothing overflows.
    """
    x = -np.square(np.asarray(beta, dtype=float)) / 4.0
    return np.exp(x), -np.expm1(x)


def _split(beta, small_fn, large_fn):
    b = np.asarray(beta, dtype=float)
    flat = b.reshape(-1)
    out = np.empty_like(flat)
    small = flat < SERIES_BETA
    if np.any(small):
        out[small] = small_fn(flat[small])
    if np.any(~small):
        out[~small] = large_fn(flat[~small])
    out = out.reshape(b.shape)
    return float(out) if out.ndim == 0 else out


def _fv_series(b):
    t = b * b
    return t * _series.evaluate(_series.eta_v_coefficients(), t)


def _fv_closed(b):
    e, one_minus_e = decay_terms(b)
    g = g_aux(b)
    return 32.0 / b**4 * (g / 2 - 1 + e) ** 2 * one_minus_e


def _fr_series(b):
    t = b * b
    return t**4 * _series.evaluate(_series.eta_r_coefficients(), t)


def _fr_closed(b):
    e, one_minus_e = decay_terms(b)
    g = g_aux(b)
    t = b * b
    curly = one_minus_e * (2 * (3 - e) * t + 32 * one_minus_e - (24 + t) * g) + 3 * g * g
    # split beta**-6 so neither factor overflows at very large beta
    return (8.0 / 3.0) * ((one_minus_e - g / 2) / b**3) * (curly / b**3)


def eta_v_shape(beta):
    """Dimensionless ``f_V`` with ``eta_V = lam (m/m0)**2 f_V(beta) / L**2``."""
    return _split(beta, _fv_series, _fv_closed)


def eta_r_shape(beta):
    """Dimensionless ``f_R`` with ``eta_R = lam (m/m0)**2 f_R(beta)``."""
    return _split(beta, _fr_series, _fr_closed)


# Written with the bare combination beta*erf(beta/2), the closed forms carry
# an explicit sqrt(pi); folding it into g_aux = sqrt(pi)*beta*erf(beta/2)
# leaves the terms g_aux/2 and g_aux**2 used in _fv_closed / _fr_closed.


def eta_v_cube(params: CslParams, geom: CubeGeometry, consts: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    """Translational diffusion coefficient, 1/(s m^2)."""
    shape = (geom.mass / consts.m0) ** 2 * eta_v_shape(geom.side / params.r_c) / geom.side**2
    return params.lam * shape


def eta_r_cube(params: CslParams, geom: CubeGeometry, consts: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    """Rotational diffusion coefficient about a face-normal axis, 1/s."""
    shape = (geom.mass / consts.m0) ** 2 * eta_r_shape(geom.side / params.r_c)
    return params.lam * shape


def diffusion_pair(params: CslParams, geom: CubeGeometry, consts: PhysicalConstants = DEFAULT_CONSTANTS) -> DiffusionPair:
    return DiffusionPair(eta_v_cube(params, geom, consts), eta_r_cube(params, geom, consts))


def csl_dns(
    params: CslParams,
    geom: CubeGeometry,
    channel: Channel,
    consts: PhysicalConstants = DEFAULT_CONSTANTS,
) -> tuple[float, UnitKind]:
    """White CSL noise spectrum ``hbar**2 * eta`` for a channel, with its unit tag."""
    if channel is Channel.ROTATIONAL:
        eta = eta_r_cube(params, geom, consts)
    else:
        eta = eta_v_cube(params, geom, consts)
    return consts.hbar**2 * eta, channel.dns_kind


# --- brute-force quadrature -------------------------------------------------


def _sinc_and_derivative(u, beta):
    """``s(u) = sin(x)/x`` and ``ds/du`` with ``x = u * beta / 2``."""
    x = u * beta / 2
    s = np.sinc(x / np.pi)
    small = np.abs(x) < 0.5
    xs = np.where(small, 1.0, x)
    ds_dx = (xs * np.cos(xs) - np.sin(xs)) / xs**2
    # Taylor series of d/dx (sin x / x) where the direct form cancels
    x2 = x * x
    series = np.zeros_like(x)
    for n in range(8, 0, -1):
        series = series * x2 + (-1) ** n * 2 * n / math.factorial(2 * n + 1)
    series = series * x
    ds_dx = np.where(small, series, ds_dx)
    return s, ds_dx * beta / 2


def _nodes(beta, spec: QuadratureSpec, q: int):
    k_max = spec.k_max_in_units_of_inv_rc
    width = min(2 * math.pi / beta, 1.0)
    panels = math.ceil(k_max / width - 1e-12)
    if panels * q > spec.max_nodes_per_axis:
        raise QuadratureTooLarge(
            f"beta={beta:g} needs {panels * q} nodes per half-axis "
            f"(max_nodes_per_axis={spec.max_nodes_per_axis})"
        )
    x, w = np.polynomial.legendre.leggauss(q)
    edges = np.linspace(0.0, k_max, panels + 1)
    a = edges[:-1, None]
    b = edges[1:, None]
    u = ((b - a) / 2 * x + (b + a) / 2).ravel()
    wt = ((b - a) / 2 * w).ravel()
    if not spec.octant:
        u = np.concatenate([-u[::-1], u])
        wt = np.concatenate([wt[::-1], wt])
    return u, wt


@numba.njit(cache=True)
def _tensor_sum(u, wg, s, ds, rotational):
    # Sum over the full tensor grid of w_i w_j w_l exp(-|u|^2) * integrand.
    # The Gaussian factorises per axis and is folded into wg.  Fixed loop
    # order keeps the result bit-reproducible.
    n = u.shape[0]
    total = 0.0
    for i in range(n):
        slab = 0.0
        for j in range(n):
            row = 0.0
            for l in range(n):
                if rotational:
                    dmu_z = s[i] * s[j] * ds[l]
                    dmu_y = s[i] * ds[j] * s[l]
                    v = u[j] * dmu_z - u[l] * dmu_y
                else:
                    mu = s[i] * s[j] * s[l]
                    v = u[i] * mu
                row += wg[l] * (v * v)
            slab += wg[j] * row
        total += wg[i] * slab
    return total


def _integral(beta, spec: QuadratureSpec, q: int, rotational: bool) -> float:
    u, w = _nodes(beta, spec, q)
    s, ds = _sinc_and_derivative(u, beta)
    wg = w * np.exp(-u * u)
    total = _tensor_sum(u, wg, s, ds, rotational)
    return 8.0 * total if spec.octant else total


def eta_numeric(
    params: CslParams,
    geom: CubeGeometry,
    consts: PhysicalConstants = DEFAULT_CONSTANTS,
    which: Channel | str = Channel.TRANSLATIONAL,
    spec: QuadratureSpec = QuadratureSpec(),
) -> float:
    """Brute-force quadrature of the defining diffusion integrals.

    ``which`` selects the translational (``"V"``) or rotational (``"R"``)
    coefficient.  Integration runs in ``u = r_C k``, where::

        eta_V = lam m^2 / (pi^1.5 m0^2 r_C^2) * int d^3u e^{-u^2} u_x^2 |s_x s_y s_z|^2
        eta_R = lam m^2 / (pi^1.5 m0^2)       * int d^3u e^{-u^2} |u_y d_z mu - u_z d_y mu|^2

    with ``mu = s_x s_y s_z`` and ``s_i = sinc(u_i L / (2 r_C))``.
    """
    rotational = _which(which) is Channel.ROTATIONAL
    if params.lam == 0:
        return 0.0
    b = geom.side / params.r_c
    value = _integral(b, spec, spec.nodes_per_panel, rotational)
    if spec.check_convergence:
        refined = _integral(b, spec, 2 * spec.nodes_per_panel, rotational)
        if abs(refined - value) > spec.rtol * abs(refined):
            raise NonConvergence(
                f"quadrature at beta={b:g} changed by "
                f"{abs(refined - value) / abs(refined):.3e} under node doubling"
            )
    pref = params.lam * (geom.mass / consts.m0) ** 2 / math.pi**1.5
    if not rotational:
        pref /= params.r_c**2
    return pref * value


def _which(which) -> Channel:
    if isinstance(which, Channel):
        return which
    key = str(which).upper()
    if key in ("V", "TRANSLATIONAL"):
        return Channel.TRANSLATIONAL
    if key in ("R", "ROTATIONAL"):
        return Channel.ROTATIONAL
    raise ValueError(f"which must be 'V' or 'R', got {which!r}")
