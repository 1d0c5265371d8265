"""Potential-based treatment of the damped harmonic oscillator.

Classical dynamics through the generator field, the canonical frame with
its vanishing conserved Hamiltonian, non-Hermitian wave-packet evolution,
exact damped Gaussian densities, and a path-integral cross-check.
"""

from .classical import (
    ClassicalGamma,
    GeneratorTrajectory,
    Regime,
    classical_gamma,
    eval_generator_jet,
    eval_x_jet,
    fit_physical_amplitudes,
    integrate_x_oracle,
    make_trajectory,
    reconstruct_x,
)
from .config import PathIntConfig, RunConfig, load_config, parse_config
from .errors import (
    CausticError,
    ConfigError,
    DamposcError,
    DegenerateDamping,
    GridTooNarrow,
    NonRealResult,
    SolveFailure,
    StepTooLarge,
    ZeroNorm,
)
from .evolution import (
    EvolutionConfig,
    Grid1D,
    WaveField,
    density,
    evolve,
    expectation_x,
    init_ground_gaussian,
    norm,
    position_spread,
    step,
)
from .hamiltonian import (
    CanonicalState,
    ScaledCanonicalState,
    canonical_from_jet,
    euler_lagrange_residual,
    hamiltonian_canonical,
    hamiltonian_potential_form,
    hamiltonian_scaled,
    scale_canonical,
    unscale_canonical,
)
from .packet import PacketSpec, density_damped, density_undamped, sigma_x, sigma_x_max
from .params import InitialConditions, OscillatorParams
from .propagator import KernelPoint, harmonic_kernel, kernel_point, propagate_packet, sliced_kernel

__version__ = "0.1.0"

__all__ = [
    "CausticError",
    "CanonicalState",
    "ClassicalGamma",
    "ConfigError",
    "DamposcError",
    "DegenerateDamping",
    "EvolutionConfig",
    "GeneratorTrajectory",
    "Grid1D",
    "GridTooNarrow",
    "InitialConditions",
    "KernelPoint",
    "NonRealResult",
    "OscillatorParams",
    "PacketSpec",
    "PathIntConfig",
    "Regime",
    "RunConfig",
    "ScaledCanonicalState",
    "SolveFailure",
    "StepTooLarge",
    "WaveField",
    "ZeroNorm",
    "canonical_from_jet",
    "classical_gamma",
    "density",
    "density_damped",
    "density_undamped",
    "euler_lagrange_residual",
    "eval_generator_jet",
    "eval_x_jet",
    "evolve",
    "expectation_x",
    "fit_physical_amplitudes",
    "harmonic_kernel",
    "hamiltonian_canonical",
    "hamiltonian_potential_form",
    "hamiltonian_scaled",
    "init_ground_gaussian",
    "integrate_x_oracle",
    "kernel_point",
    "load_config",
    "make_trajectory",
    "norm",
    "parse_config",
    "position_spread",
    "propagate_packet",
    "reconstruct_x",
    "scale_canonical",
    "sliced_kernel",
    "step",
    "unscale_canonical",
]
