"""Exception and warning types shared across the package."""


class DcavityError(Exception):
    """Base class for all package errors."""


class ConfigError(DcavityError):
    """Bad or incomplete configuration input."""


class ZeroCouplingField(DcavityError):
    """The red-sideband intracavity field vanishes, so the amplitude ratio is undefined."""


class ZeroCoupling(DcavityError):
    """Effective optomechanical coupling is zero where a finite value is required."""


class NoConvergence(DcavityError):
    """Fixed-point iteration exhausted its iteration budget."""

    def __init__(self, message: str, residual: float):
        super().__init__(f"{message} (last residual {residual:.3e})")
        self.residual = residual


class AmbiguousBranch(DcavityError):
    """Damped iteration oscillates between candidate fixed points."""


class NearSingular(DcavityError):
    """Response evaluated at or next to the divergence point of the linear system."""


class UnstableSystem(DcavityError):
    """Time integration refused: no steady oscillation exists near/inside instability."""


class StepTooLarge(DcavityError):
    """Integration step cannot resolve the fastest rate in the system."""


class WindowTooShort(DcavityError):
    """Trajectory does not cover the requested demodulation window."""


class UnknownPreset(DcavityError):
    """Figure preset name not recognized."""


class ResolvedSidebandWarning(UserWarning):
    """Mechanical frequency does not exceed the cavity linewidth."""


class LinearizationWarning(UserWarning):
    """Static mechanical displacement is not small against the mechanical frequency."""
