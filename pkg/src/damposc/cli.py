"""Batch command-line front end.

    damposc <classical|verify|evolve|pathint> --config <path> [--out <dir>]

Outputs land in --out, else $DAMPOSC_OUT, else the config's outputs.dir,
else the working directory.  CSV files use RFC-4180 quoting, '.' decimals
and 17-significant-digit floats, so identical configs reproduce identical
bytes.  Exit codes: 0 success, 2 bad configuration, 3 degenerate physics
(critical damping, caustic time), 4 verification failure.
"""

import argparse
import csv
import math
import os
import sys

import numpy as np

from .checks import run_checks
from .classical import eval_generator_jet, fit_physical_amplitudes, integrate_x_oracle, reconstruct_x
from .config import RunConfig, load_config
from .errors import CausticError, ConfigError, DamposcError, DegenerateDamping
from .evolution import evolve, expectation_x, init_ground_gaussian, norm, position_spread
from .figure import render_density_svg
from .packet import density_damped, sigma_x_max
from .propagator import harmonic_kernel, sliced_kernel

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_DEGENERATE = 3
EXIT_CHECK_FAILED = 4


def _fmt(v: float) -> str:
    return f"{float(v):.17g}"


def _write_csv(path, header, rows):
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\r\n")
        writer.writerow(header)
        writer.writerows(rows)


def cmd_classical(config: RunConfig, outdir: str) -> int:
    """Closed-form trajectory against the direct integrator -> classical.csv."""
    p, ic = config.params, config.ic
    traj = fit_physical_amplitudes(p, ic)  # raises DegenerateDamping when singular
    t_end = 20.0 * math.pi / p.omega
    dt = p.period / 1000.0
    ts, xs, _ = integrate_x_oracle(p, ic, t_end, dt)
    rows = []
    for i in range(0, len(ts), 10):
        t = ts[i]
        jet = eval_generator_jet(traj, t)
        x_closed = reconstruct_x(traj, t)
        rows.append((
            _fmt(t), _fmt(x_closed), _fmt(xs[i]), _fmt(abs(x_closed - xs[i])),
            _fmt(jet[0]), _fmt(jet[1]), _fmt(jet[2]), _fmt(jet[3]),
        ))
    _write_csv(os.path.join(outdir, "classical.csv"),
               ["t", "x_closed", "x_oracle", "abs_err", "q", "qdot", "qddot", "qdddot"],
               rows)
    return EXIT_OK


def cmd_verify(config: RunConfig, outdir: str) -> int:
    """Run the invariant suite; report to stdout and verify_report.txt."""
    results = run_checks(config)
    lines = []
    for r in results:
        if r.status == "SKIPPED":
            lines.append(f"{r.name:<58s} SKIPPED ({r.note})")
        else:
            extra = f"  [{r.note}]" if r.note else ""
            lines.append(
                f"{r.name:<58s} measured={r.measured:.3e}  tol={r.tolerance:.3e}  "
                f"{r.status}{extra}"
            )
    n_fail = sum(r.failed for r in results)
    lines.append(f"{n_fail} failure(s) out of {len(results)} checks")
    report = "\n".join(lines) + "\n"
    sys.stdout.write(report)
    with open(os.path.join(outdir, "verify_report.txt"), "w", encoding="utf-8") as fh:
        fh.write(report)
    return EXIT_CHECK_FAILED if n_fail else EXIT_OK


def cmd_evolve(config: RunConfig, outdir: str) -> int:
    """Damped packet run -> density.csv, observables.csv and fig1.svg."""
    p = config.params
    field = init_ground_gaussian(p, config.grid, config.ic.x0)
    snaps = evolve(field, p, config.evolution, sample_every=1)

    rows = []
    for s in snaps:
        n = norm(s)
        decay = math.exp(-4.0 * p.lam * s.time)
        rows.append((_fmt(s.time), _fmt(n), _fmt(n / decay),
                     _fmt(expectation_x(s)), _fmt(position_spread(s))))
    _write_csv(os.path.join(outdir, "observables.csv"),
               ["t", "norm", "norm_over_decay", "mean_x", "sigma_numeric"], rows)

    n_steps = config.evolution.n_steps
    snap_every = max(1, n_steps // 8)
    picks = [s for i, s in enumerate(snaps) if i % snap_every == 0 or i == n_steps]
    xs = config.grid.xs
    rows = []
    panel = []
    for s in picks:
        rho_n = np.abs(s.values) ** 2
        rho_a = density_damped(p, config.packet, xs, s.time)
        panel.append((s.time, rho_n, rho_a))
        for x, rn, ra in zip(xs, rho_n, rho_a):
            rows.append((_fmt(s.time), _fmt(x), _fmt(rn), _fmt(ra)))
    _write_csv(os.path.join(outdir, "density.csv"),
               ["t", "x", "rho_numeric", "rho_analytic"], rows)

    if config.outputs.svg:
        reach = abs(config.ic.x0) + 5.0 * sigma_x_max(p, config.packet)
        window = (max(config.grid.x_min, -reach), min(config.grid.x_max, reach))
        svg = render_density_svg(xs, panel, x_window=window,
                                 title="Damped oscillator density over one period")
        with open(os.path.join(outdir, "fig1.svg"), "w", encoding="utf-8") as fh:
            fh.write(svg)
    return EXIT_OK


def pathint_sample_points(config: RunConfig) -> np.ndarray:
    """Endpoint sample for the convergence table: 8 points spanning the
    packet's dynamic range (classical swing or ground width, whichever
    is larger, times 1.5)."""
    p = config.params
    half = 1.5 * max(abs(config.ic.x0), math.sqrt(p.hbar / (p.mass * p.omega)))
    return np.linspace(-half, half, 8)


def cmd_pathint(config: RunConfig, outdir: str) -> int:
    """Sliced-kernel convergence against the analytic kernel -> CSV."""
    p = config.params
    t = config.pathint.omega_t / p.omega
    pts = pathint_sample_points(config)
    k_exact = harmonic_kernel(p, pts[np.newaxis, :], pts[:, np.newaxis], t)
    ref = float(np.linalg.norm(k_exact))
    rows = []
    for n in config.pathint.slice_table:
        k_num = np.array([[sliced_kernel(p, xa, xb, t, n, config.pathint.grid)
                           for xa in pts] for xb in pts])
        err = float(np.linalg.norm(k_num - k_exact)) / ref
        rows.append((str(n), _fmt(err)))
    _write_csv(os.path.join(outdir, "kernel_convergence.csv"),
               ["n_slices", "l2_error"], rows)
    return EXIT_OK


_COMMANDS = {
    "classical": cmd_classical,
    "verify": cmd_verify,
    "evolve": cmd_evolve,
    "pathint": cmd_pathint,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="damposc",
        description="Damped quantum oscillator batch runs (classical fit, "
                    "invariant verification, wave evolution, path-integral check).",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, fn in _COMMANDS.items():
        cp = sub.add_parser(name, help=fn.__doc__.split("\n")[0] if fn.__doc__ else None)
        cp.add_argument("--config", required=True, help="JSON run configuration")
        cp.add_argument("--out", default=None, help="output directory "
                        "(default: $DAMPOSC_OUT, config outputs.dir, or cwd)")
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        config = load_config(args.config)
    except OSError as exc:
        print(f"damposc: cannot read config: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ConfigError as exc:
        print(f"damposc: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    outdir = args.out or os.environ.get("DAMPOSC_OUT") or config.outputs.directory or "."
    os.makedirs(outdir, exist_ok=True)

    try:
        return _COMMANDS[args.command](config, outdir)
    except (DegenerateDamping, CausticError) as exc:
        print(f"damposc: degenerate physics: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except DamposcError as exc:
        print(f"damposc: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
