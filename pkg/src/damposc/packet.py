"""Closed-form breathing-width Gaussian densities, damped and undamped.

These are the exact densities the PDE solver is checked against: a Gaussian
whose center follows x0*cos(omega*t) and whose width oscillates with the
squeeze parameter, all multiplied by the uniform decay exp(-4*lam*t).
"""

import math
from dataclasses import dataclass

import numpy as np

from .params import OscillatorParams


@dataclass(frozen=True)
class PacketSpec:
    """Initial center x0 (m) and squeeze parameter gamma_squeeze.

    gamma_squeeze = 1 gives the rigid coherent packet; any other positive
    value makes the width breathe with period pi/omega.
    """

    x0: float
    gamma_squeeze: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.x0)):
            raise ValueError("x0 must be finite")
        if not (math.isfinite(self.gamma_squeeze) and self.gamma_squeeze > 0):
            raise ValueError("gamma_squeeze must be positive")


def sigma_x(params: OscillatorParams, spec: PacketSpec, t: float) -> float:
    """Width sigma_x(t), the positive root of

    sigma^2 = (hbar / (2*gs*m*omega)) * (cos^2(omega*t) + gs^2 sin^2(omega*t)).
    """
    gs = spec.gamma_squeeze
    c = math.cos(params.omega * t)
    s = math.sin(params.omega * t)
    var = params.hbar / (2.0 * gs * params.mass * params.omega) * (c * c + gs * gs * s * s)
    return math.sqrt(var)


def sigma_x_max(params: OscillatorParams, spec: PacketSpec) -> float:
    """Largest width over a period, used for box-containment rules."""
    gs = spec.gamma_squeeze
    var = params.hbar / (2.0 * gs * params.mass * params.omega) * max(1.0, gs * gs)
    return math.sqrt(var)


def density_undamped(params: OscillatorParams, spec: PacketSpec, x, t: float):
    """|Psi(x,t)|^2 of the breathing packet, unit spatial integral.

    The prefactor is 1/(sigma*sqrt(2*pi)); this is the unique choice that
    both normalizes the density and reduces to the squared ground-state
    Gaussian at t = 0 with gamma_squeeze = 1.
    """
    s = sigma_x(params, spec, t)
    center = spec.x0 * math.cos(params.omega * t)
    x = np.asarray(x, dtype=float)
    rho = np.exp(-((x - center) ** 2) / (2.0 * s * s)) / (s * math.sqrt(2.0 * math.pi))
    return rho if rho.ndim else float(rho)


def density_damped(params: OscillatorParams, spec: PacketSpec, x, t: float):
    """Damped density: the undamped shape times exp(-4*lam*t)."""
    rho = density_undamped(params, spec, x, t)
    return rho * math.exp(-4.0 * params.lam * t)
