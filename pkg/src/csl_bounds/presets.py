"""Built-in experiment presets."""

from __future__ import annotations

from .physics import CubeGeometry

LISA_PATHFINDER = {
    "name": "lisa-pathfinder",
    # Au-Pt test masses
    "side_m": 0.046,
    "mass_kg": 1.928,
    # minimum relative torque DNS, reached near 3 mHz
    "torque_floor": 5.7e-34,
    "torque_floor_frequency_hz": 3e-3,
    # force DNS used for the earlier translational bound
    "force_floor": 3.15e-30,
    "band_hz": (1e-3, 1e-2),
    "gas_model": "confined",
}

# theory proposals, (lambda 1/s, r_C m)
REFERENCE_POINTS = {
    "GRW": (1e-16, 1e-7),
    "Adler": (1e-8, 1e-7),
}

PRESETS = {LISA_PATHFINDER["name"]: LISA_PATHFINDER}


def preset_geometry(preset: dict) -> CubeGeometry:
    return CubeGeometry(preset["side_m"], preset["mass_kg"])


def get_preset(name: str) -> dict:
    try:
        return PRESETS[name]
    except KeyError:
        raise ValueError(f"unknown preset {name!r}; available: {sorted(PRESETS)}") from None
