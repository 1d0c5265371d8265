"""Physical constants of the oscillator and the classical initial data."""

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class OscillatorParams:
    """Constants shared by every module.

    mass in kg, lam (damping factor) in 1/s, omega (angular frequency) in
    1/s, hbar in J*s.  Natural units (everything 1) are the common choice
    in tests and shipped configs.
    """

    mass: float
    lam: float
    omega: float
    hbar: float = 1.0

    def __post_init__(self):
        for name in ("mass", "omega", "hbar"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0):
                raise ValueError(f"{name} must be positive and finite, got {v!r}")
        if not (math.isfinite(self.lam) and self.lam >= 0):
            raise ValueError(f"lam must be non-negative and finite, got {self.lam!r}")

    @property
    def period(self) -> float:
        return 2.0 * math.pi / self.omega


@dataclass(frozen=True)
class InitialConditions:
    """Initial position x0 (m) and velocity v0 (m/s) of the measurable motion."""

    x0: float
    v0: float

    def __post_init__(self):
        if not (math.isfinite(self.x0) and math.isfinite(self.v0)):
            raise ValueError("initial conditions must be finite")
