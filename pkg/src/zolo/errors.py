"""Exception hierarchy shared by all zolo modules."""


class ZoloError(Exception):
    """Base class for every error raised by this package."""


class ConfigError(ZoloError, ValueError):
    """Invalid user-supplied configuration."""


class NumericError(ZoloError, ArithmeticError):
    """Base class for numerical failures."""


# numerics
class EmptyMatrix(ZoloError, ValueError):
    pass


class NonFiniteEntry(ZoloError, ValueError):
    pass


class RankOutOfRange(ZoloError, ValueError):
    pass


class DimensionMismatch(ZoloError, ValueError):
    pass


class ConvergenceFailure(NumericError):
    pass


# rational
class DivideByZeroWeightSum(NumericError):
    """Barycentric denominator vanished away from a support point."""


class SingularAtPoint(NumericError):
    """Descriptor pencil is singular at the evaluation point."""


class IllConditioned(NumericError):
    """Monomial coefficients do not reproduce the function."""


class DegenerateSigma(NumericError, ValueError):
    pass


# domains
class InvalidGeometry(ConfigError):
    pass


class UnknownExample(ConfigError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class TooFewPoints(ConfigError):
    pass


# loewner
class CoincidentPoints(NumericError, ValueError):
    pass


class RankDeficientPencil(NumericError):
    pass


# aaa
class InsufficientSamples(ConfigError):
    pass


class StagnationAtMachinePrecision(UserWarning):
    """Emitted (not raised) when AAA residuals stop decreasing near eps."""


# zolotarev
class UndefinedOutsideSets(ZoloError, ValueError):
    pass


class DegenerateTau(NumericError):
    """tau >= 1: the sign approximation cannot be mapped to a ratio solution."""


class NormalizationDrift(NumericError):
    pass


class ZeroOnF(NumericError):
    pass


class MethodFailure(NumericError):
    def __init__(self, stage, inner):
        self.stage = stage
        self.inner = inner
        super().__init__(f"{stage}: {type(inner).__name__}: {inner}")
