"""Exception hierarchy.

Configuration problems derive from :class:`ConfigError`; everything raised
while computing derives from :class:`ComputationError`. The CLI maps the two
families to exit codes 2 and 3.
"""


class HairOptError(Exception):
    """Base class for all package errors."""


class ConfigError(HairOptError, ValueError):
    def __init__(self, path: str, reason: str):
        self.path = path
        self.reason = reason
        super().__init__(f"{path or '<root>'}: {reason}")


class SchemaError(ConfigError):
    pass


class UnitError(ConfigError):
    pass


class ComputationError(HairOptError):
    pass


class DomainError(ComputationError, ValueError):
    pass


class InvalidMeasurement(ComputationError, ValueError):
    pass


class NoConvergence(ComputationError, ArithmeticError):
    pass


class GapCollapse(ComputationError, ArithmeticError):
    """The electrode touches (or passes through) the substrate somewhere."""

    def __init__(self, message: str, r0: float | None = None):
        self.r0 = r0
        super().__init__(message)


class ShapeMismatch(ComputationError, ValueError):
    pass


class InvalidStep(ComputationError, ValueError):
    pass


class PastPullIn(ComputationError, ArithmeticError):
    pass


class NoSoftening(ComputationError, ValueError):
    pass


class ResonanceSingular(ComputationError, ArithmeticError):
    pass


class NotBracketed(ComputationError, ValueError):
    pass
