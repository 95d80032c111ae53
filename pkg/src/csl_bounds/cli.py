"""Command-line front end.

Subcommands ``eta``, ``alpha``, ``bound`` and ``simulate`` write plot-ready
CSV/JSON into ``--output-dir`` together with a ``manifest.json`` that records
everything needed to rerun the command.

Exit codes: 0 success, 2 usage error, 3 data/format error, 4 numerical failure.
"""

from __future__ import annotations

import argparse
import datetime as _dt
import hashlib
import json
import math
import platform
import sys
from pathlib import Path

import numpy as np

from . import __version__
from ._csvio import DataFormatError, write_rows
from .alpha import GasModel, alpha_curve, alpha_grid, write_curve_csv
from .bounds import (
    EmptyBand,
    ExperimentRecord,
    default_r_c_grid,
    exclusion_curve,
    read_overlay_csv,
    read_psd_csv,
    write_exclusion_csv,
    write_overlay_merged,
)
from .diffusion import NonConvergence, QuadratureSpec, eta_numeric, eta_r_cube, eta_v_cube
from .langevin import (
    DEFAULT_PROBE_FACTORS,
    OscillatorConfig,
    UnstableStep,
    average_estimates,
    recovered_noise_dns,
    spawn_seeds,
    simulate,
    transfer_check,
    welch_psd,
)
from .physics import (
    Channel,
    CslParams,
    CubeGeometry,
    PhysicalConstants,
    SpectralDensity,
    UnitKind,
    UnitMismatch,
)
from .presets import REFERENCE_POINTS, get_preset, preset_geometry

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_NUMERIC = 0, 2, 3, 4
DEFAULT_SEED = 12345


class UsageError(Exception):
    pass


# --- manifest -----------------------------------------------------------------


def file_digest(path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 20), b""):
            h.update(chunk)
    return h.hexdigest()


def write_manifest(out_dir: Path, command: str, params: dict, inputs=(), outputs=()):
    manifest = {
        "command": command,
        "parameters": params,
        "inputs": {str(p): file_digest(p) for p in inputs},
        "outputs": sorted(str(Path(p).name) for p in outputs),
        "tool": "csl-bounds",
        "tool_version": __version__,
        "python": platform.python_version(),
        "numpy": np.__version__,
        "timestamp": _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds"),
    }
    path = out_dir / "manifest.json"
    path.write_text(json.dumps(manifest, indent=2, default=_json_default) + "\n")
    return path


def _json_default(o):
    if isinstance(o, (np.floating, np.integer)):
        return o.item()
    if isinstance(o, np.ndarray):
        return o.tolist()
    if isinstance(o, (Path,)):
        return str(o)
    raise TypeError(f"cannot serialise {type(o).__name__}")


# --- shared argument handling ---------------------------------------------------


def _constants(args) -> PhysicalConstants:
    return PhysicalConstants(m0=args.m0) if args.m0 is not None else PhysicalConstants()


def _preset(args):
    return get_preset(args.preset) if args.preset else None


def _geometry(args, preset) -> CubeGeometry:
    side = args.side if args.side is not None else (preset["side_m"] if preset else None)
    mass = args.mass if args.mass is not None else (preset["mass_kg"] if preset else None)
    if side is None or mass is None:
        raise UsageError("cube geometry needed: pass --side and --mass or --preset lisa-pathfinder")
    try:
        return CubeGeometry(side, mass)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _add_geometry(p):
    p.add_argument("--side", type=float, help="cube side L in m")
    p.add_argument("--mass", type=float, help="cube mass m in kg")


def _out_dir(args) -> Path:
    d = Path(args.output_dir)
    d.mkdir(parents=True, exist_ok=True)
    return d


# --- eta ---------------------------------------------------------------------


def cmd_eta(args) -> int:
    preset = _preset(args)
    geom = _geometry(args, preset)
    consts = _constants(args)
    if args.lam is None or args.r_c is None:
        raise UsageError("eta needs --lambda and --r-c")
    try:
        params = CslParams(args.lam, args.r_c)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    eta_v = eta_v_cube(params, geom, consts)
    eta_r = eta_r_cube(params, geom, consts)
    rows = [
        ("eta_v", eta_v, "1/(s m^2)"),
        ("eta_r", eta_r, "1/s"),
        ("hbar2_eta_v", consts.hbar**2 * eta_v, "N^2/Hz"),
        ("hbar2_eta_r", consts.hbar**2 * eta_r, "N^2 m^2/Hz"),
    ]
    spec = QuadratureSpec(nodes_per_panel=args.nodes_per_panel, k_max_in_units_of_inv_rc=args.k_max)
    if args.numeric:
        nv = eta_numeric(params, geom, consts, Channel.TRANSLATIONAL, spec)
        nr = eta_numeric(params, geom, consts, Channel.ROTATIONAL, spec)
        rows += [
            ("eta_v_numeric", nv, "1/(s m^2)"),
            ("eta_r_numeric", nr, "1/s"),
            ("eta_v_rel_diff", _rel(nv, eta_v), "1"),
            ("eta_r_rel_diff", _rel(nr, eta_r), "1"),
        ]
    print(f"geometry: L = {geom.side:g} m, m = {geom.mass:g} kg; lambda = {params.lam:g} 1/s, r_C = {params.r_c:g} m")
    print(f"beta = L/r_C = {geom.side / params.r_c:.6g}")
    for name, value, unit in rows:
        print(f"{name:>16s} = {value:.10e}  {unit}")
    out = _out_dir(args)
    csv_path = write_rows(out / "eta.csv", ("quantity", "value", "unit"), rows)
    write_manifest(
        out,
        "eta",
        {
            "lambda": params.lam, "r_c": params.r_c, "side_m": geom.side, "mass_kg": geom.mass,
            "hbar": consts.hbar, "m0": consts.m0, "numeric": args.numeric,
            "nodes_per_panel": args.nodes_per_panel, "k_max": args.k_max,
        },
        outputs=[csv_path],
    )
    return EXIT_OK


def _rel(a, b):
    if a == b:
        return 0.0
    return abs(a - b) / abs(b)


# --- alpha -------------------------------------------------------------------


def _models(key):
    if key == "both":
        return [GasModel.CONFINED_ENCLOSURE, GasModel.INFINITE_VOLUME]
    return [GasModel.from_key(key)]


def cmd_alpha(args) -> int:
    out = _out_dir(args)
    outputs = []
    if args.mode == "curve":
        if not (0 < args.beta_min < args.beta_max) or args.points < 2:
            raise UsageError("curve needs 0 < --beta-min < --beta-max and --points >= 2")
        betas = np.logspace(math.log10(args.beta_min), math.log10(args.beta_max), args.points)
        curve = alpha_curve(betas)
        outputs.append(write_curve_csv(out / "alpha_curve.csv", curve))
        print(f"alpha/L^2 at beta={betas[-1]:g}: CSL {curve[-1, 1]:.6g}, confined {curve[-1, 2]:g}, infinite {curve[-1, 3]:g}")
        params = {"mode": "curve", "beta_min": args.beta_min, "beta_max": args.beta_max, "points": args.points}
    else:
        params = {
            "mode": "grid", "r_c_range": [args.r_c_min, args.r_c_max],
            "l_range": [args.l_min, args.l_max], "resolution": args.resolution, "model": args.model,
        }
        for model in _models(args.model):
            try:
                grid = alpha_grid((args.r_c_min, args.r_c_max), (args.l_min, args.l_max), model, args.resolution)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
            outputs.append(grid.to_csv(out / f"alpha_grid_{model.key}.csv"))
            outputs.append(grid.write_summary(out / f"alpha_grid_{model.key}.json"))
            s = grid.summary()
            print(
                f"{model.key}: log10(alpha_CSL/alpha_gas) in [{s['log10_ratio_min']:.4f}, {s['log10_ratio_max']:.4f}], "
                f"rotational preferred on {100 * s['rotational_preferred_fraction']:.1f}% of the grid"
            )
    write_manifest(out, "alpha", params, outputs=outputs)
    return EXIT_OK


# --- bound -------------------------------------------------------------------


def _single_sample(floor, channel, frequency):
    return SpectralDensity([frequency], [floor], channel.dns_kind)


def cmd_bound(args) -> int:
    preset = _preset(args)
    geom = _geometry(args, preset)
    consts = _constants(args)
    band = tuple(args.band) if args.band else (preset["band_hz"] if preset else (1e-3, 1e-2))
    channels = [Channel.ROTATIONAL, Channel.TRANSLATIONAL] if args.channel == "both" else [Channel(args.channel)]
    if args.input and len(channels) > 1:
        raise UsageError("--channel both needs preset floors; give one channel with --input")
    if args.points < 2 or not (0 < args.r_c_min < args.r_c_max):
        raise UsageError("need 0 < --r-c-min < --r-c-max and --points >= 2")
    grid = default_r_c_grid(args.points, args.r_c_min, args.r_c_max)
    out = _out_dir(args)
    inputs, outputs, curves = [], [], {}
    floor_frequency = preset["torque_floor_frequency_hz"] if preset else math.sqrt(band[0] * band[1])

    for channel in channels:
        if args.input:
            spectrum = read_psd_csv(args.input)
            inputs.append(args.input)
            source = f"file {args.input}"
        elif args.floor is not None:
            spectrum = _single_sample(args.floor, channel, floor_frequency)
            source = "scalar floor from command line"
        elif preset:
            key = "torque_floor" if channel is Channel.ROTATIONAL else "force_floor"
            spectrum = _single_sample(preset[key], channel, floor_frequency)
            source = f"preset {preset['name']} {key}"
        else:
            raise UsageError("bound needs --input, --floor or --preset")
        record = ExperimentRecord(geom, spectrum, channel, band)
        curve = exclusion_curve(record, grid, consts, source=source)
        curves[channel] = curve
        outputs.append(write_exclusion_csv(out / f"exclusion_{channel.value}.csv", curve))
        print(f"{channel.value}: floor = {curve.dns_floor:.3g} {channel.dns_kind.si_label} ({source})")

    points = dict(REFERENCE_POINTS) if preset else {}
    for i, (lam, r_c) in enumerate(args.check or []):
        points[f"point{i + 1}"] = (lam, r_c)
    classification = {}
    for name, (lam, r_c) in points.items():
        classification[name] = {}
        for channel, curve in curves.items():
            lam_max = curve.lambda_at(r_c)
            verdict = "excluded" if lam > lam_max else "allowed"
            classification[name][channel.value] = {"lambda": lam, "r_c": r_c, "lambda_max": lam_max, "verdict": verdict}
            print(f"{name} (lambda={lam:g}, r_C={r_c:g}): {verdict} by {channel.value} bound (lambda_max={lam_max:.3g})")

    summary = {"classification": classification}
    if len(curves) == 2:
        ratio = curves[Channel.ROTATIONAL].lambda_max / curves[Channel.TRANSLATIONAL].lambda_max
        window = (grid >= 10**-5.5) & (grid <= 10**-3.5)
        if np.any(window):
            summary["rot_over_trans_in_1e-5.5_1e-3.5"] = [float(ratio[window].min()), float(ratio[window].max())]
            print(
                "lambda_max rotational / translational for r_C in [1e-5.5, 1e-3.5] m: "
                f"{ratio[window].min():.3f} .. {ratio[window].max():.3f}"
            )
        outputs.append(
            write_rows(out / "exclusion_ratio.csv", ("r_c_m", "rot_over_trans"), zip(grid.tolist(), ratio.tolist()))
        )

    if args.overlay:
        merged = {f"this_work_{c.value}": (cv.r_c, cv.lambda_max) for c, cv in curves.items()}
        for spec in args.overlay:
            label, sep, path = spec.partition("=")
            if not sep:
                label, path = Path(spec).stem, spec
            merged[label] = read_overlay_csv(path)
            inputs.append(path)
        outputs.append(write_overlay_merged(out / "overlay_merged.csv", merged))

    summary_path = out / "bound_summary.json"
    summary_path.write_text(json.dumps(summary, indent=2) + "\n")
    outputs.append(summary_path)
    write_manifest(
        out,
        "bound",
        {
            "channel": args.channel, "side_m": geom.side, "mass_kg": geom.mass, "band_hz": list(band),
            "r_c_grid": {"min": args.r_c_min, "max": args.r_c_max, "points": args.points},
            "floor": args.floor, "input": args.input, "preset": args.preset,
            "hbar": consts.hbar, "m0": consts.m0, "checks": args.check, "overlays": args.overlay,
        },
        inputs=inputs,
        outputs=outputs,
    )
    return EXIT_OK


# --- simulate ----------------------------------------------------------------


def load_scenario(path, preset=None, consts=None, seed_override=None) -> dict:
    """Parse and validate a simulation scenario file into resolved values."""
    try:
        raw = json.loads(Path(path).read_text())
    except FileNotFoundError:
        raise
    except json.JSONDecodeError as exc:
        raise DataFormatError(f"{path}:{exc.lineno}: invalid JSON ({exc.msg})") from None
    if not isinstance(raw, dict):
        raise DataFormatError(f"{path}: scenario must be a JSON object")

    def need(key, default=None):
        if key in raw:
            return raw[key]
        if default is not None:
            return default
        raise DataFormatError(f"{path}: missing required key {key!r}")

    try:
        channel = Channel(raw.get("channel", "rotational"))
        g = raw.get("geometry")
        if g is None and preset is None:
            raise DataFormatError(f"{path}: missing 'geometry' (or pass --preset)")
        geom = CubeGeometry(float(g["side_m"]), float(g["mass_kg"])) if g else preset_geometry(preset)
        consts = consts or PhysicalConstants()
        if "noise_dns" in raw:
            noise = float(raw["noise_dns"])
            csl = None
        elif "csl" in raw:
            csl = CslParams(float(raw["csl"]["lambda"]), float(raw["csl"]["r_c"]))
            eta = eta_r_cube(csl, geom, consts) if channel is Channel.ROTATIONAL else eta_v_cube(csl, geom, consts)
            noise = consts.hbar**2 * eta
        else:
            raise DataFormatError(f"{path}: need either 'noise_dns' or 'csl'")
        inertia = geom.moment_of_inertia() if channel is Channel.ROTATIONAL else geom.mass
        config = OscillatorConfig(float(need("omega0")), float(need("gamma")), inertia, noise, channel)
        dt = float(need("dt"))
        segments = int(raw.get("segments", 32))
        if "duration" in raw:
            duration = float(raw["duration"])
        else:
            duration = (segments + 1) * int(need("nperseg")) / 2 * dt
        nyquist = 0.5 / dt
        f0 = config.omega0 / (2 * math.pi)
        default_band = [20 * f0, nyquist / 8] if f0 > 0 else [nyquist / 100, nyquist / 8]
        scenario = {
            "channel": channel,
            "geometry": geom,
            "csl": csl,
            "config": config,
            "dt": dt,
            "duration": duration,
            "seed": int(seed_override if seed_override is not None else raw.get("seed", DEFAULT_SEED)),
            "trajectories": int(raw.get("trajectories", 1)),
            "segments": segments,
            "probe_factors": [float(x) for x in raw.get("probe_factors", DEFAULT_PROBE_FACTORS)],
            "probe_halfwidth": float(raw.get("probe_halfwidth", 0.05)),
            "flat_band_hz": [float(x) for x in raw.get("flat_band_hz", default_band)],
            "trajectory_rows": int(raw.get("trajectory_rows", 10000)),
            "scheme": raw.get("scheme", "symplectic"),
            "tolerance": float(raw.get("tolerance", 0.10)),
        }
    except (KeyError, TypeError) as exc:
        raise DataFormatError(f"{path}: malformed scenario ({exc})") from None
    except ValueError as exc:
        if isinstance(exc, (DataFormatError, UnstableStep)):
            raise
        raise DataFormatError(f"{path}: {exc}") from None
    if scenario["trajectories"] < 1:
        raise DataFormatError(f"{path}: trajectories must be >= 1")
    return scenario


def run_scenario(sc: dict) -> dict:
    """Simulate, estimate spectra and check them; returns arrays and the report."""
    config = sc["config"]
    seeds = spawn_seeds(sc["seed"], sc["trajectories"])
    coord, accel, recovered, first = [], [], [], None
    for ss in seeds:
        traj = simulate(config, sc["duration"], sc["dt"], ss, scheme=sc["scheme"])
        if first is None:
            first = traj
        coord.append(welch_psd(traj, "coordinate", sc["segments"]))
        accel.append(welch_psd(traj, "acceleration", sc["segments"]))
        recovered.append(
            recovered_noise_dns(traj, config, sc["flat_band_hz"], sc["segments"], geometry=sc["geometry"])[0]
        )
    coord_est = average_estimates(coord)
    accel_est = average_estimates(accel)
    f0 = config.omega0 / (2 * math.pi)
    probes = [k * f0 for k in sc["probe_factors"]] if f0 > 0 else None
    transfer = transfer_check(config, coord_est, probes, sc["probe_halfwidth"])
    rec = float(np.mean(recovered))
    injected = config.noise_dns
    rec_dev = 0.0 if injected == rec == 0 else (abs(rec / injected - 1) if injected else math.inf)
    tol = sc["tolerance"]
    report = {
        "injected_noise_dns": injected,
        "noise_unit": config.channel.dns_kind.si_label,
        "recovered_noise_dns": rec,
        "recovered_rel_deviation": rec_dev,
        "flat_band_hz": sc["flat_band_hz"],
        "transfer": transfer.as_dict(),
        "segments_total": coord_est.segment_count,
        "tolerance": tol,
        "passed": bool(rec_dev <= tol and transfer.max_rel_deviation <= tol),
        "rng": {"bit_generator": "PCG64", "master_seed": sc["seed"], "splitting": "SeedSequence(master).spawn(n)"},
    }
    return {"first": first, "coordinate": coord_est, "acceleration": accel_est, "report": report}


def cmd_simulate(args) -> int:
    if not args.config:
        raise UsageError("simulate needs --config SCENARIO.json")
    preset = _preset(args)
    consts = _constants(args)
    sc = load_scenario(args.config, preset, consts, args.seed)
    result = run_scenario(sc)
    out = _out_dir(args)
    first = result["first"]
    rows = min(sc["trajectory_rows"], first.coordinate.size)
    outputs = [
        write_rows(
            out / "trajectory.csv",
            ("t_s", "coordinate", "momentum"),
            zip(first.times[:rows].tolist(), first.coordinate[:rows].tolist(), first.momentum[:rows].tolist()),
        )
    ]
    ce, ae = result["coordinate"], result["acceleration"]
    outputs.append(write_rows(out / "psd_coordinate.csv", ("frequency_hz", "psd_value"), zip(ce.frequencies.tolist(), ce.values.tolist())))
    keep = ae.frequencies > 0
    if sc["channel"] is Channel.ROTATIONAL:
        # angular acceleration, ready for the torque conversion in ``bound``
        name, kind, scale = "psd_acceleration.csv", UnitKind.ANGACCEL2.value, 1.0
    else:
        # force-equivalent spectrum, S_F = (m**2 / 4) S_acc
        name, kind, scale = "psd_force.csv", UnitKind.FORCE2.value, 0.25 * sc["config"].inertia ** 2
    outputs.append(
        write_rows(
            out / name,
            ("frequency_hz", "psd_value", "unit_kind"),
            ((f, scale * v, kind) for f, v in zip(ae.frequencies[keep].tolist(), ae.values[keep].tolist())),
        )
    )
    report = result["report"]
    rpath = out / "report.json"
    rpath.write_text(json.dumps(report, indent=2) + "\n")
    outputs.append(rpath)
    print(
        f"injected {report['injected_noise_dns']:.4e}, recovered {report['recovered_noise_dns']:.4e} "
        f"{report['noise_unit']} (rel. dev. {report['recovered_rel_deviation']:.3%})"
    )
    for p in report["transfer"]["probes"]:
        print(f"  probe {p['frequency_hz']:.4g} Hz: measured/predicted - 1 = {p['measured'] / p['predicted'] - 1 if p['predicted'] else 0.0:+.3%}")
    print("PASS" if report["passed"] else "FAIL", f"(tolerance {sc['tolerance']:.0%})")
    params = {
        k: (v.value if isinstance(v, Channel) else v)
        for k, v in sc.items()
        if k not in ("config", "geometry", "csl")
    }
    params.update(
        geometry={"side_m": sc["geometry"].side, "mass_kg": sc["geometry"].mass},
        csl=None if sc["csl"] is None else {"lambda": sc["csl"].lam, "r_c": sc["csl"].r_c},
        omega0=sc["config"].omega0, gamma=sc["config"].gamma, inertia=sc["config"].inertia,
        noise_dns=sc["config"].noise_dns, m0=consts.m0, hbar=consts.hbar,
    )
    write_manifest(out, "simulate", params, inputs=[args.config], outputs=outputs)
    return EXIT_OK


# --- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="csl-bounds", description=__doc__.split("\n\n")[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("--output-dir", default="csl-out", help="directory for CSV/JSON outputs (default: %(default)s)")
    p.add_argument("--preset", choices=["lisa-pathfinder"], help="built-in experiment parameters")
    p.add_argument("--m0", type=float, help="override the CSL reference mass in kg (default: 1 u)")
    p.add_argument("--seed", type=int, help="master RNG seed for simulate")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eta", help="CSL diffusion coefficients of a cube")
    e.add_argument("--lambda", dest="lam", type=float, help="collapse rate in 1/s")
    e.add_argument("--r-c", dest="r_c", type=float, help="correlation length in m")
    _add_geometry(e)
    e.add_argument("--numeric", action="store_true", help="also run the brute-force quadrature")
    e.add_argument("--nodes-per-panel", type=int, default=8)
    e.add_argument("--k-max", type=float, default=8.0, help="k cut-off in units of 1/r_C")
    e.set_defaults(func=cmd_eta)

    a = sub.add_parser("alpha", help="torque/force noise ratio curves and grids")
    a.add_argument("mode", choices=["curve", "grid"])
    a.add_argument("--model", choices=["confined", "infinite", "both"], default="both")
    a.add_argument("--beta-min", type=float, default=1e-2)
    a.add_argument("--beta-max", type=float, default=1e4)
    a.add_argument("--points", type=int, default=400)
    a.add_argument("--r-c-min", type=float, default=1e-8)
    a.add_argument("--r-c-max", type=float, default=1e-2)
    a.add_argument("--l-min", type=float, default=1e-3)
    a.add_argument("--l-max", type=float, default=1.0)
    a.add_argument("--resolution", type=int, default=200)
    a.set_defaults(func=cmd_alpha)

    b = sub.add_parser("bound", help="exclusion curve lambda_max(r_C)")
    b.add_argument("--input", help="PSD CSV (frequency_hz,psd_value,unit_kind)")
    b.add_argument("--floor", type=float, help="scalar DNS floor instead of an input file")
    b.add_argument("--channel", choices=["rotational", "translational", "both"], default="rotational")
    _add_geometry(b)
    b.add_argument("--band", type=float, nargs=2, metavar=("F_MIN", "F_MAX"))
    b.add_argument("--r-c-min", type=float, default=1e-8)
    b.add_argument("--r-c-max", type=float, default=1e-2)
    b.add_argument("--points", type=int, default=300)
    b.add_argument("--overlay", action="append", metavar="LABEL=PATH", help="literature bound CSV (r_c_m,lambda_max_per_s)")
    b.add_argument("--check", action="append", type=float, nargs=2, metavar=("LAMBDA", "R_C"), help="classify a parameter point")
    b.set_defaults(func=cmd_bound)

    s = sub.add_parser("simulate", help="Langevin simulation and spectral validation")
    s.add_argument("--config", help="scenario JSON file")
    s.set_defaults(func=cmd_simulate)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except UnstableStep as exc:
        print(f"error: {exc} (suggested dt: {exc.suggested_dt:.6g} s)", file=sys.stderr)
        return EXIT_NUMERIC
    except (NonConvergence, FloatingPointError, ArithmeticError) as exc:
        print(f"error: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (DataFormatError, UnitMismatch, EmptyBand, FileNotFoundError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
