"""Exception types shared across the package."""


class DamposcError(Exception):
    """Base class for all damposc errors."""


class DegenerateDamping(DamposcError):
    """Closed-form generator amplitudes are singular (lambda = 0 or critical
    damping); the direct integrator must be used instead."""


class NonRealResult(DamposcError):
    """A quantity that must be real came out with a significant imaginary
    part, which signals inconsistent mode amplitudes."""


class StepTooLarge(DamposcError):
    """Requested integrator step violates the accuracy contract."""


class GridTooNarrow(DamposcError):
    """Spatial box cannot contain the wave packet (or the classical paths)."""


class SolveFailure(DamposcError):
    """Tridiagonal system lost diagonal dominance or could not be solved."""


class ZeroNorm(DamposcError):
    """Wave field norm underflowed; expectation values are undefined."""


class CausticError(DamposcError):
    """Harmonic kernel requested at (or too close to) a caustic time, where
    it degenerates to a delta distribution."""


class ConfigError(DamposcError):
    """Run configuration is invalid.

    Carries a list of (field path, reason) pairs so a single parse reports
    every problem at once.
    """

    def __init__(self, issues):
        if isinstance(issues, str):
            issues = [("", issues)]
        self.issues = list(issues)
        lines = [f"{path}: {reason}" if path else reason for path, reason in self.issues]
        super().__init__("invalid configuration: " + "; ".join(lines))
