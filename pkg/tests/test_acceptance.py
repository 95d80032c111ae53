"""Acceptance suite.

Each test checks one acceptance criterion at its stated tolerance and prints
a single ``criterion N: PASS`` or ``criterion N: FAIL`` line with the
measured figure.  Run with ``pytest tests/test_acceptance.py -v`` or
directly with ``python3 tests/test_acceptance.py``.
"""

import math
import time

import numpy as np
import pytest

from csl_bounds.alpha import GasModel, alpha_csl, rotational_preferred
from csl_bounds.bounds import (
    ExperimentRecord,
    converted_torque_check,
    default_r_c_grid,
    exclusion_curve,
    read_exclusion_csv,
    read_psd_csv,
    write_exclusion_csv,
    write_psd_csv,
)
from csl_bounds.diffusion import eta_numeric, eta_r_cube, eta_v_cube
from csl_bounds.langevin import (
    OscillatorConfig,
    average_estimates,
    recovered_noise_dns,
    simulate,
    simulate_ensemble,
    spawn_seeds,
    transfer_check,
    welch_psd,
)
from csl_bounds.physics import Channel, CslParams, CubeGeometry, SpectralDensity, UnitKind

SEED = 12345
HBAR = 1.054571817e-34
LISA = CubeGeometry(0.046, 1.928)
TORQUE_FLOOR = 5.7e-34
FORCE_FLOOR = 3.15e-30


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\ncriterion {number}: {'PASS' if ok else 'FAIL'} ({detail})")
        return ok

    return emit


def test_criterion_1_oracle_equivalence(report):
    start = time.perf_counter()
    worst = 0.0
    for b in (0.1, 1.0, 10.0, 50.0):
        p = CslParams(1.0, LISA.side / b)
        for which, analytic in (("V", eta_v_cube(p, LISA)), ("R", eta_r_cube(p, LISA))):
            worst = max(worst, abs(eta_numeric(p, LISA, which=which) / analytic - 1))
    elapsed = time.perf_counter() - start
    ok = worst <= 1e-6 and elapsed <= 60
    report(1, ok, f"max rel. error {worst:.2e} <= 1e-6, runtime {elapsed:.1f} s <= 60 s")
    assert ok


def test_criterion_2_alpha_asymptote(report):
    betas = np.logspace(math.log10(30.0), 12, 4000)
    rel = np.abs(alpha_csl(betas, LISA.side) / LISA.side**2 * 6 - 1)
    worst = int(np.argmax(rel))
    failing = betas[rel > 1e-3]
    detail = f"max |6 alpha/L^2 - 1| = {rel[worst]:.3e} at beta = {betas[worst]:.4g}; tolerance 1e-3"
    if failing.size:
        detail += f"; violated for beta in [{failing.min():.4g}, {failing.max():.4g}]"
    ok = bool(np.all(rel <= 1e-3))
    report(2, ok, detail)
    assert ok


def test_criterion_3_converted_torque(report):
    pred = converted_torque_check(FORCE_FLOOR, LISA, GasModel.CONFINED_ENCLOSURE)
    dev = abs(pred / 2.66e-34 - 1)
    ok = dev <= 0.02
    report(3, ok, f"0.04 L^2 S_F = {pred:.4e} N^2 m^2/Hz, {dev:.2%} from 2.66e-34 (<= 2%)")
    assert ok


def test_criterion_4_factor_two(report):
    grid = default_r_c_grid()
    rot = exclusion_curve(
        ExperimentRecord(LISA, SpectralDensity([3e-3], [TORQUE_FLOOR], UnitKind.TORQUE2), Channel.ROTATIONAL), grid
    )
    trans = exclusion_curve(
        ExperimentRecord(LISA, SpectralDensity([3e-3], [FORCE_FLOOR], UnitKind.FORCE2), Channel.TRANSLATIONAL), grid
    )
    window = (grid >= 10**-5.5) & (grid <= 10**-3.5)
    ratio = rot.lambda_max[window] / trans.lambda_max[window]
    ok = window.sum() > 10 and bool(np.all(np.abs(ratio - 0.51) <= 0.05))
    report(4, ok, f"lambda_max ratio in [{ratio.min():.4f}, {ratio.max():.4f}] over {window.sum()} grid points; target 0.51 +- 0.05")
    assert ok


def test_criterion_5_gas_model_decision(report):
    p = CslParams(1e-8, 1e-7)
    confined = rotational_preferred(p, LISA, GasModel.CONFINED_ENCLOSURE)
    infinite = rotational_preferred(p, LISA, GasModel.INFINITE_VOLUME)
    ok = confined and not infinite
    report(5, ok, f"confined -> {confined}, infinite volume -> {infinite}")
    assert ok


def test_criterion_6_numerical_robustness(report):
    betas = np.logspace(-3, 6, 5001)
    with np.errstate(over="raise", divide="raise", invalid="raise"):
        a = alpha_csl(betas, LISA.side)
        ev = np.array([eta_v_cube(CslParams(1.0, LISA.side / b), LISA) for b in betas])
        er = np.array([eta_r_cube(CslParams(1.0, LISA.side / b), LISA) for b in betas])
    ok = all(np.all(np.isfinite(x)) and np.all(x > 0) for x in (a, ev, er))
    report(6, ok, f"{betas.size} points in beta [1e-3, 1e6]: alpha, eta_V, eta_R finite and positive = {ok}")
    assert ok


def test_criterion_7_simulator_closure(report):
    start = time.perf_counter()
    injected = HBAR**2 * eta_r_cube(CslParams(1e-8, 1e-7), LISA)
    config = OscillatorConfig(2 * math.pi * 1e-3, 1e-4, LISA.moment_of_inertia(), injected, Channel.ROTATIONAL)
    dt, segments, n_traj = 2.0, 64, 8
    duration = (segments + 1) * 2**17 * dt    # segments of 2**18 samples, 50 % overlap
    band = (0.02, 0.05)                       # gamma, omega0 << omega << Nyquist / 4
    coord, recovered = [], []
    for ss in spawn_seeds(SEED, n_traj):
        traj = simulate(config, duration, dt, ss)
        coord.append(welch_psd(traj, "coordinate", segments))
        recovered.append(recovered_noise_dns(traj, config, band, segments, geometry=LISA)[0])
    transfer = transfer_check(config, average_estimates(coord))
    rec_dev = abs(np.mean(recovered) / injected - 1)
    elapsed = time.perf_counter() - start
    ok = rec_dev <= 0.10 and transfer.max_rel_deviation <= 0.10 and elapsed <= 300
    report(
        7,
        ok,
        f"recovered torque DNS {np.mean(recovered):.4e} vs injected {injected:.4e} ({rec_dev:.2%}); "
        f"max transfer deviation {transfer.max_rel_deviation:.2%} over {len(transfer.probes)} probes; "
        f"{n_traj} x {segments} segments; {elapsed:.0f} s",
    )
    assert ok


def test_criterion_8_free_diffusion(report):
    s = HBAR**2 * eta_r_cube(CslParams(1e-8, 1e-7), LISA)
    config = OscillatorConfig(0.0, 0.0, LISA.moment_of_inertia(), s)
    n, dt, steps = 1000, 1.0, 1000
    p = np.array([t.momentum for t in simulate_ensemble(config, steps * dt, dt, SEED, n)])
    checkpoints = np.arange(100, steps + 1, 100)
    dev = np.array([p[:, k].var(ddof=1) / (s / 2 * k * dt) - 1 for k in checkpoints])
    ok = bool(np.all(np.abs(dev) <= 0.05))
    report(8, ok, f"Var[p(t)] / (S t / 2) - 1 over t = 100..1000 s: [{dev.min():+.2%}, {dev.max():+.2%}]; tolerance 5%")
    assert ok


def test_criterion_9_round_trip(report, tmp_path):
    rng = np.random.default_rng(SEED)
    freqs = np.sort(rng.uniform(1e-4, 1e-1, 200))
    psd = rng.uniform(0.5, 2.0, 200) * TORQUE_FLOOR
    original = SpectralDensity(freqs, psd, UnitKind.TORQUE2)
    write_psd_csv(tmp_path / "psd.csv", original)
    ingested = read_psd_csv(tmp_path / "psd.csv")
    curve = exclusion_curve(ExperimentRecord(LISA, ingested, Channel.ROTATIONAL))
    first = write_exclusion_csv(tmp_path / "curve.csv", curve)
    back = read_exclusion_csv(first)
    second = write_exclusion_csv(tmp_path / "again.csv", back)
    ok = (
        ingested == original
        and back == curve
        and first.read_bytes() == second.read_bytes()
        and back.dns_floor == float(psd[(freqs >= 1e-3) & (freqs <= 1e-2)].min())
    )
    report(9, ok, "PSD CSV -> floor -> exclusion CSV -> re-ingest bit-exact" if ok else "mismatch after round trip")
    assert ok


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-v"]))
