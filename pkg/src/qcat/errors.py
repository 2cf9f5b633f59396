"""Exception types shared across the package."""


class QcatError(Exception):
    """Base class for errors raised by qcat."""


class ConsistencyError(QcatError, RuntimeError):
    """An internal self-check failed; the computed data contradicts itself."""


class EvaluationSingularity(QcatError, ArithmeticError):
    """A denominator vanishes (numerically) at the requested point."""


class GammaPoleError(QcatError, ArithmeticError):
    """A Gamma-function argument sits on or next to a pole."""


class LevelCapExceeded(QcatError, ValueError):
    """Requested Verma level is above the configured cap."""
