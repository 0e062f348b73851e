"""Structured errors raised by the library layers.

Every error carries a human-readable message. The CLI maps a ConfigError
raised while reading arguments to exit status 2 and any other TraError to 1.
"""


class TraError(Exception):
    """Base class for all computation errors."""


class ConfigError(TraError, ValueError):
    pass


# orthopoly

class DegreeOutOfRangeError(TraError, ValueError):
    pass


class InvalidAlphaError(TraError, ValueError):
    pass


class RuleTooSmallError(TraError, ValueError):
    pass


# tra

class EnergyTooSmallError(TraError, ValueError):
    pass


class SingularityOffError(TraError, ValueError):
    pass


class InvalidBasisError(TraError, ValueError):
    """A pole of the tridiagonal coefficients was hit (e.g. mu = -1 with N = 0)."""


class NonrealOffdiagError(TraError, ValueError):
    pass


class RecursionPoleError(TraError, ZeroDivisionError):
    pass


# eigen

class EmptyMatrixError(TraError, ValueError):
    pass


class InvalidBracketError(TraError, ValueError):
    pass


class RootSearchError(TraError, ValueError):
    """Bisection could not evaluate the determinant inside a bracket."""


# hmatrix

class NonFiniteMatrixError(TraError, ValueError):
    pass


# pps

class WindowTooSmallError(TraError, ValueError):
    pass


class DegeneratePointError(TraError, ZeroDivisionError):
    pass


class TargetOutOfRangeError(TraError, ValueError):
    pass


# wavefn

class GridTooCoarseError(TraError, ValueError):
    pass


class InvalidEnergyError(TraError, ValueError):
    pass


class InsufficientLevelsError(TraError, ValueError):
    pass
