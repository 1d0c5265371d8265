"""Classical damped oscillator through the generator potential.

The measurable coordinate obeys  x'' + 2*lam*x' + omega^2*x = 0  and is
produced from an auxiliary generator field q via

    x = q'' - 2*lam*q' + omega^2*q.

q itself solves a 4th-order equation whose modes are exp(r*t) with the four
rates r = -(lam+gamma), -(lam-gamma), +(lam+gamma), +(lam-gamma), where
gamma = sqrt(lam^2 - omega^2) lives in the complex plane.  The growing
(b) modes are annihilated by the map q -> x and never enter physical fits.
"""

import cmath
import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateDamping, NonRealResult, StepTooLarge
from .params import InitialConditions, OscillatorParams

# |lam - omega| below this (relative to omega) counts as critical damping;
# small enough not to swallow lam=0.01, omega=1.
CRITICAL_TOL = 1e-9

# imaginary residue allowed before a jet value is declared non-real
_REAL_TOL = 1e-9


class Regime(enum.Enum):
    UNDERDAMPED = "underdamped"
    OVERDAMPED = "overdamped"
    CRITICAL = "critical"


@dataclass(frozen=True)
class ClassicalGamma:
    """gamma = sqrt(lam^2 - omega^2) with its damping-regime classification."""

    value: complex
    regime: Regime


def classical_gamma(params: OscillatorParams) -> ClassicalGamma:
    """Damping discriminant in the complex domain.

    Underdamped input gives a purely imaginary value (real part exactly 0);
    the critical regime is a classification here, not an error.
    """
    lam, omega = params.lam, params.omega
    if abs(lam - omega) < CRITICAL_TOL * omega:
        return ClassicalGamma(0j, Regime.CRITICAL)
    value = cmath.sqrt(complex(lam * lam - omega * omega, 0.0))
    regime = Regime.OVERDAMPED if lam > omega else Regime.UNDERDAMPED
    return ClassicalGamma(value, regime)


@dataclass(frozen=True)
class GeneratorTrajectory:
    """Mode amplitudes of the 4th-order generator solution.

    q(t) = a1*e^{-(lam+g)t} + a2*e^{-(lam-g)t} + b1*e^{+(lam+g)t} + b2*e^{+(lam-g)t}

    `rates` stores the four exponents in that order; a trajectory fitted
    from real initial data has b1 = b2 = 0 and conjugate-paired a's in the
    underdamped regime, so every jet value is real.
    """

    a1: complex
    a2: complex
    b1: complex
    b2: complex
    rates: tuple
    params: OscillatorParams

    @property
    def amplitudes(self) -> tuple:
        return (self.a1, self.a2, self.b1, self.b2)


def make_trajectory(params: OscillatorParams, a1=0j, a2=0j, b1=0j, b2=0j) -> GeneratorTrajectory:
    """Trajectory with exact mode rates derived from params."""
    g = classical_gamma(params).value
    lam = params.lam
    rates = (-(lam + g), -(lam - g), +(lam + g), +(lam - g))
    return GeneratorTrajectory(complex(a1), complex(a2), complex(b1), complex(b2), rates, params)


def fit_physical_amplitudes(params: OscillatorParams, ic: InitialConditions) -> GeneratorTrajectory:
    """Fit a1, a2 so the reconstructed x matches x(0)=x0 and x'(0)=v0.

    The closed form divides by lam and gamma, so lam = 0 and critical
    damping raise DegenerateDamping; use integrate_x_oracle there.
    """
    cg = classical_gamma(params)
    lam = params.lam
    if lam == 0.0:
        raise DegenerateDamping("lam = 0: closed-form amplitudes divide by lam")
    if cg.regime is Regime.CRITICAL:
        raise DegenerateDamping(
            "critical damping: closed-form amplitudes divide by gamma"
        )
    g = cg.value
    x0, v0 = ic.x0, ic.v0
    a1 = ((g - lam) * x0 - v0) / (8.0 * g * lam * (lam + g))
    a2 = ((g + lam) * x0 + v0) / (8.0 * g * lam * (lam - g))
    return make_trajectory(params, a1=a1, a2=a2)


def _real_part(z: complex, scale: float, what: str) -> float:
    if abs(z.imag) > _REAL_TOL * max(scale, abs(z)):
        raise NonRealResult(
            f"{what} has imaginary residue {z.imag:.3e} (scale {scale:.3e}); "
            "amplitudes are inconsistent"
        )
    return z.real


def eval_generator_jet(traj: GeneratorTrajectory, t: float):
    """(q, q', q'', q''') at time t, differentiated analytically mode-wise.

    Raises NonRealResult if the complex-conjugate pairing fails to cancel
    the imaginary parts.
    """
    out = []
    for n in range(4):
        z = 0j
        scale = 0.0
        for c, r in zip(traj.amplitudes, traj.rates):
            term = c * r**n * cmath.exp(r * t)
            z += term
            scale += abs(term)
        out.append(_real_part(z, scale, f"generator jet order {n}"))
    return tuple(out)


def _x_amplitudes(traj: GeneratorTrajectory):
    # mode amplitudes of x = q'' - 2*lam*q' + omega^2*q; exactly zero on
    # the growing modes, whose rates are roots of r^2 - 2*lam*r + omega^2
    lam, w2 = traj.params.lam, traj.params.omega**2
    return [c * (r * r - 2.0 * lam * r + w2) for c, r in zip(traj.amplitudes, traj.rates)]


def eval_x_jet(traj: GeneratorTrajectory, t: float):
    """(x, x', x'') at time t, analytic through the generator modes."""
    amps = _x_amplitudes(traj)
    out = []
    for n in range(3):
        z = 0j
        scale = 0.0
        for c, r in zip(amps, traj.rates):
            term = c * r**n * cmath.exp(r * t)
            z += term
            scale += abs(term)
        out.append(_real_part(z, scale, f"x jet order {n}"))
    return tuple(out)


def reconstruct_x(traj: GeneratorTrajectory, t: float) -> float:
    """Measurable coordinate x(t) = q'' - 2*lam*q' + omega^2*q."""
    return eval_x_jet(traj, t)[0]


def integrate_x_oracle(params: OscillatorParams, ic: InitialConditions,
                       t_end: float, dt: float):
    """Direct 4th-order Runge-Kutta integration of the damped equation.

    Independent of the generator machinery; valid in every regime
    including lam = 0 and critical damping.  Returns (t, x, v) arrays
    sampled at every accepted step.  The step is shrunk (never grown) so
    the last sample lands exactly on t_end.
    """
    if not (dt > 0.0 and t_end > 0.0):
        raise ValueError("dt and t_end must be positive")
    if dt * params.omega > 0.5:
        raise StepTooLarge(
            f"dt*omega = {dt * params.omega:.3g} > 0.5 breaks the accuracy contract"
        )
    n = max(1, math.ceil(t_end / dt - 1e-12))
    h = t_end / n
    lam, w2 = params.lam, params.omega**2

    ts = np.empty(n + 1)
    xs = np.empty(n + 1)
    vs = np.empty(n + 1)
    x, v = ic.x0, ic.v0
    ts[0], xs[0], vs[0] = 0.0, x, v
    for i in range(1, n + 1):
        k1x = v
        k1v = -2.0 * lam * v - w2 * x
        k2x = v + 0.5 * h * k1v
        k2v = -2.0 * lam * k2x - w2 * (x + 0.5 * h * k1x)
        k3x = v + 0.5 * h * k2v
        k3v = -2.0 * lam * k3x - w2 * (x + 0.5 * h * k2x)
        k4x = v + h * k3v
        k4v = -2.0 * lam * k4x - w2 * (x + h * k3x)
        x += h / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x)
        v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v)
        ts[i], xs[i], vs[i] = i * h, x, v
    return ts, xs, vs
