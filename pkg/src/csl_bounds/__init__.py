"""CSL collapse-model noise: diffusion coefficients, exclusion bounds and
Langevin validation for cubic test masses."""

__version__ = "0.1.0"

from .physics import (  # noqa: F401
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
from .diffusion import (  # noqa: F401
    DiffusionPair,
    NonConvergence,
    QuadratureSpec,
    csl_dns,
    diffusion_pair,
    eta_numeric,
    eta_r_cube,
    eta_v_cube,
    g_aux,
)
from .alpha import GasModel, alpha_csl, alpha_gas, alpha_grid, rotational_preferred  # noqa: F401
from .bounds import (  # noqa: F401
    EmptyBand,
    ExclusionCurve,
    ExperimentRecord,
    converted_torque_check,
    dns_floor,
    exclusion_curve,
    lambda_max,
    torque_dns_from_angular_accel,
)
