"""Exception hierarchy shared across the package."""


class MagsurfError(Exception):
    """Base class for all package errors."""


class DomainError(MagsurfError):
    """A point or stencil left the chart rectangle."""


class MetricError(MagsurfError):
    """Metric is not positive-definite where it was sampled."""


class FieldError(MagsurfError):
    """Magnetic field data violates its contract (non-positive, undefined)."""


class TraceError(MagsurfError):
    """Level-set tracing failed (open curve, step ceiling, bad seed)."""


class NearCriticalError(TraceError):
    """|grad B| fell below the floor: the level is too close to critical."""


class IntegrationError(MagsurfError):
    """Time integration failed (step ceiling, non-finite state)."""


class DegenerateLevelError(MagsurfError):
    """An experiment refused a level set that fails the twist condition."""


class ReductionError(MagsurfError):
    """Axisymmetric reduction has no admissible region or an indefinite field."""


class ExprError(MagsurfError):
    """Expression parsing or evaluation failure."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at offset {position})"
        super().__init__(message)


class EvalError(ExprError):
    """Math-domain failure while evaluating an expression."""


class ConfigError(MagsurfError):
    """Run configuration file is malformed or incomplete."""
