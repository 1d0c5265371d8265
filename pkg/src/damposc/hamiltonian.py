"""Canonical frame built on the generator jet and the H = 0 conservation law.

The squared-field Lagrangian L = x^2/2 with x = q'' - 2*lam*q' + omega^2*q
carries second derivatives, so the canonical construction yields two
coordinate/momentum pairs:

    q1 = q            p1 = 4*lam^2*q' - q''' - omega^2*q' - 2*lam*omega^2*q
    q2 = q'           p2 = q'' - 2*lam*q' + omega^2*q      (= x)

H has no explicit time dependence, so it is conserved on every generator
trajectory; on the physical subspace (b-modes zero) it is exactly zero.
"""

import cmath
from dataclasses import dataclass

from .classical import GeneratorTrajectory
from .params import OscillatorParams


@dataclass(frozen=True)
class CanonicalState:
    q1: float
    q2: float
    p1: float
    p2: float


@dataclass(frozen=True)
class ScaledCanonicalState:
    """Unit-restoring image of CanonicalState: Q = omega*q, P = m*omega*p."""

    Q1: float
    Q2: float
    P1: float
    P2: float


def canonical_from_jet(params: OscillatorParams, jet) -> CanonicalState:
    """Coordinates and momenta from the jet (q, q', q'', q''')."""
    q, qd, qdd, qddd = jet
    lam, w2 = params.lam, params.omega**2
    return CanonicalState(
        q1=q,
        q2=qd,
        p1=4.0 * lam * lam * qd - qddd - w2 * qd - 2.0 * lam * w2 * q,
        p2=qdd - 2.0 * lam * qd + w2 * q,
    )


def scale_canonical(params: OscillatorParams, state: CanonicalState) -> ScaledCanonicalState:
    w, mw = params.omega, params.mass * params.omega
    return ScaledCanonicalState(
        Q1=w * state.q1, Q2=w * state.q2, P1=mw * state.p1, P2=mw * state.p2
    )


def unscale_canonical(params: OscillatorParams, state: ScaledCanonicalState) -> CanonicalState:
    w, mw = params.omega, params.mass * params.omega
    return CanonicalState(
        q1=state.Q1 / w, q2=state.Q2 / w, p1=state.P1 / mw, p2=state.P2 / mw
    )


def hamiltonian_potential_form(params: OscillatorParams, jet) -> float:
    """H written directly in the generator jet:

    H = 2*lam^2*q'^2 - q'''*q' - omega^2*q'^2 + q''^2/2 - omega^4*q^2/2
    """
    q, qd, qdd, qddd = jet
    lam, w2 = params.lam, params.omega**2
    return (
        2.0 * lam * lam * qd * qd
        - qddd * qd
        - w2 * qd * qd
        + 0.5 * qdd * qdd
        - 0.5 * w2 * w2 * q * q
    )


def hamiltonian_canonical(state: CanonicalState, params: OscillatorParams) -> float:
    """H = p2^2/2 - omega^2*p2*q1 + p1*q2 + 2*lam*p2*q2."""
    w2 = params.omega**2
    return (
        0.5 * state.p2 * state.p2
        - w2 * state.p2 * state.q1
        + state.p1 * state.q2
        + 2.0 * params.lam * state.p2 * state.q2
    )


def hamiltonian_scaled(state: ScaledCanonicalState, params: OscillatorParams) -> float:
    """Energy-unit Hamiltonian (joules):

    H' = P2^2/(2m) - omega^2*P2*Q1 + P1*Q2 + 2*lam*P2*Q2,

    related to the bare form by H' = m*omega^2*H on scaled pairs.
    """
    w2 = params.omega**2
    return (
        state.P2 * state.P2 / (2.0 * params.mass)
        - w2 * state.P2 * state.Q1
        + state.P1 * state.Q2
        + 2.0 * params.lam * state.P2 * state.Q2
    )


def euler_lagrange_residual(params: OscillatorParams, traj: GeneratorTrajectory, t: float) -> float:
    """Magnitude of the 4th-order variational equation at time t.

    The equation factorizes into (d^2 + 2*lam*d + omega^2) acting on
    x = (d^2 - 2*lam*d + omega^2) q, so mode-wise the residual is the
    characteristic polynomial evaluated at each stored rate.  It vanishes
    identically whenever the rates are the exact mode rates, whatever the
    amplitudes; a perturbed rate makes it nonzero.
    """
    lam, w2 = params.lam, params.omega**2
    z = 0j
    for c, r in zip(traj.amplitudes, traj.rates):
        char = (r * r + 2.0 * lam * r + w2) * (r * r - 2.0 * lam * r + w2)
        z += c * char * cmath.exp(r * t)
    return abs(z)
