"""JSON run configuration: parsing, validation, defaults.

The document is a flat object for the physics plus optional nested
sections mirroring the module types::

    {
      "mass": 1.0, "lambda": 0.01, "omega": 1.0, "x0": -1.0, "v0": 0.0,
      "hbar": 1.0,                    # default 1
      "gamma_squeeze": 1.0,           # default 1
      "grid":      {"x_min": -8.0, "x_max": 8.0, "n_points": 1024},
      "evolution": {"dt": ..., "n_steps": 1000, "damping_mode": "coupled"},
      "pathint":   {"omega_t": 0.785398..., "max_slices": 256,
                    "x_min": -10.0, "x_max": 10.0, "n_points": 512},
      "outputs":   {"dir": null, "svg": true}
    }

Unknown keys anywhere are rejected.  All validation problems are
collected and raised together in one ConfigError.
"""

import json
import math
from dataclasses import dataclass

from .errors import ConfigError
from .evolution import DAMPING_MODES, EvolutionConfig, Grid1D
from .packet import PacketSpec, sigma_x_max
from .params import InitialConditions, OscillatorParams

REQUIRED_FIELDS = ("mass", "lambda", "omega", "x0", "v0")


@dataclass(frozen=True)
class PathIntConfig:
    """Settings of the kernel-convergence run."""

    omega_t: float = math.pi / 4.0
    max_slices: int = 256
    grid: Grid1D = Grid1D(-10.0, 10.0, 512)

    @property
    def slice_table(self):
        n, table = 4, []
        while n <= self.max_slices:
            table.append(n)
            n *= 2
        return table


@dataclass(frozen=True)
class OutputConfig:
    directory: str | None = None
    svg: bool = True


@dataclass(frozen=True)
class RunConfig:
    params: OscillatorParams
    ic: InitialConditions
    packet: PacketSpec
    grid: Grid1D
    evolution: EvolutionConfig
    pathint: PathIntConfig
    outputs: OutputConfig


def _number(raw, path, issues, *, positive=False, non_negative=False):
    if isinstance(raw, bool) or not isinstance(raw, (int, float)):
        issues.append((path, "must be a number"))
        return None
    v = float(raw)
    if not math.isfinite(v):
        issues.append((path, "must be finite"))
        return None
    if positive and v <= 0:
        issues.append((path, "must be positive"))
        return None
    if non_negative and v < 0:
        issues.append((path, "must be non-negative"))
        return None
    return v


def _integer(raw, path, issues, *, minimum):
    if isinstance(raw, bool) or not isinstance(raw, int):
        issues.append((path, "must be an integer"))
        return None
    if raw < minimum:
        issues.append((path, f"must be >= {minimum}"))
        return None
    return raw


def _section(doc, name, allowed, issues):
    raw = doc.get(name, {})
    if not isinstance(raw, dict):
        issues.append((name, "must be an object"))
        return {}
    for key in raw:
        if key not in allowed:
            issues.append((f"{name}.{key}", "unknown key"))
    return raw


def parse_config(text: str) -> RunConfig:
    """Parse and validate a JSON config document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError([("", f"not valid JSON: {exc}")]) from exc
    if not isinstance(doc, dict):
        raise ConfigError([("", "top level must be a JSON object")])

    issues = []
    top_allowed = set(REQUIRED_FIELDS) | {
        "hbar", "gamma_squeeze", "grid", "evolution", "pathint", "outputs"
    }
    for key in doc:
        if key not in top_allowed:
            issues.append((key, "unknown key"))
    for key in REQUIRED_FIELDS:
        if key not in doc:
            issues.append((key, "required field missing"))

    mass = _number(doc.get("mass", 1.0), "mass", issues, positive=True)
    lam = _number(doc.get("lambda", 0.0), "lambda", issues, non_negative=True)
    omega = _number(doc.get("omega", 1.0), "omega", issues, positive=True)
    hbar = _number(doc.get("hbar", 1.0), "hbar", issues, positive=True)
    x0 = _number(doc.get("x0", 0.0), "x0", issues)
    v0 = _number(doc.get("v0", 0.0), "v0", issues)
    gs = _number(doc.get("gamma_squeeze", 1.0), "gamma_squeeze", issues, positive=True)

    g = _section(doc, "grid", {"x_min", "x_max", "n_points"}, issues)
    gx_min = _number(g.get("x_min", -8.0), "grid.x_min", issues)
    gx_max = _number(g.get("x_max", 8.0), "grid.x_max", issues)
    g_n = _integer(g.get("n_points", 1024), "grid.n_points", issues, minimum=8)

    ev = _section(doc, "evolution", {"dt", "n_steps", "damping_mode"}, issues)
    default_dt = 1e-3 * 2.0 * math.pi / (omega or 1.0)
    dt = _number(ev.get("dt", default_dt), "evolution.dt", issues, positive=True)
    n_steps = _integer(ev.get("n_steps", 1000), "evolution.n_steps", issues, minimum=0)
    mode = ev.get("damping_mode", "coupled")
    if mode not in DAMPING_MODES:
        issues.append(("evolution.damping_mode", f"must be one of {DAMPING_MODES}"))
        mode = "coupled"

    pi_sec = _section(doc, "pathint", {"omega_t", "max_slices", "x_min", "x_max", "n_points"}, issues)
    omega_t = _number(pi_sec.get("omega_t", math.pi / 4.0), "pathint.omega_t", issues, positive=True)
    max_slices = _integer(pi_sec.get("max_slices", 256), "pathint.max_slices", issues, minimum=4)
    px_min = _number(pi_sec.get("x_min", -10.0), "pathint.x_min", issues)
    px_max = _number(pi_sec.get("x_max", 10.0), "pathint.x_max", issues)
    p_n = _integer(pi_sec.get("n_points", 512), "pathint.n_points", issues, minimum=8)

    out = _section(doc, "outputs", {"dir", "svg"}, issues)
    out_dir = out.get("dir", None)
    if out_dir is not None and not isinstance(out_dir, str):
        issues.append(("outputs.dir", "must be a string or null"))
        out_dir = None
    svg = out.get("svg", True)
    if not isinstance(svg, bool):
        issues.append(("outputs.svg", "must be a boolean"))
        svg = True

    if issues:
        raise ConfigError(issues)

    params = OscillatorParams(mass=mass, lam=lam, omega=omega, hbar=hbar)
    ic = InitialConditions(x0=x0, v0=v0)
    packet = PacketSpec(x0=x0, gamma_squeeze=gs)

    if gx_min >= gx_max:
        issues.append(("grid", "x_min must be below x_max"))
    else:
        grid = Grid1D(gx_min, gx_max, g_n)
        # box must contain the oscillating packet: 6 widths beyond the
        # classical swing, with the width maximized over the squeeze cycle
        reach = abs(x0) + 6.0 * sigma_x_max(params, packet)
        if gx_max < reach or gx_min > -reach:
            issues.append(
                ("grid", f"box must cover |x| <= {reach:.4g} "
                         "(|x0| + 6 max widths) to contain the packet")
            )
    if dt * omega >= 0.1:
        issues.append(("evolution.dt", f"dt*omega = {dt * omega:.3g} must stay below 0.1"))
    if px_min >= px_max:
        issues.append(("pathint", "x_min must be below x_max"))
    if issues:
        raise ConfigError(issues)

    return RunConfig(
        params=params,
        ic=ic,
        packet=packet,
        grid=grid,
        evolution=EvolutionConfig(dt=dt, n_steps=n_steps, damping_mode=mode),
        pathint=PathIntConfig(omega_t=omega_t, max_slices=max_slices,
                              grid=Grid1D(px_min, px_max, p_n)),
        outputs=OutputConfig(directory=out_dir, svg=svg),
    )


def load_config(path) -> RunConfig:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_config(fh.read())
