"""Exception and warning types shared across the package."""


class ConfigurationError(ValueError):
    """Invalid parameters, schedules, or input files."""


class DivergenceError(RuntimeError):
    """A sampling chain or training run produced non-finite or exploding values."""

    def __init__(self, message, *, step=None, effective_step=None):
        super().__init__(message)
        self.step = step
        self.effective_step = effective_step


class NoiseRangeWarning(UserWarning):
    """A queried noise level fell outside the representable range and was clamped."""


class StepSizeWarning(UserWarning):
    """A step size is large relative to the current noise level."""
