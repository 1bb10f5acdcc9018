"""Exception types raised across the package."""


class MinCodesError(Exception):
    """Base class for all errors raised by mincodes."""


class ParameterError(MinCodesError, ValueError):
    """A parameter lies outside the range an operation supports."""


class NotIrreducible(ParameterError):
    pass


class NotPrimitive(ParameterError):
    pass


class BadSize(ParameterError):
    pass


class BadOrder(ParameterError):
    pass


class BadEpsilon(ParameterError):
    pass


class BadParams(ParameterError):
    pass


class BadBreakpoints(ParameterError):
    pass


class DeltaOutOfRange(ParameterError):
    pass


class MTooSmall(ParameterError):
    pass


class EvenM(ParameterError):
    """The pure Gold-exponent quadratic code is only defined (and minimal) for odd m."""


class ConstantFunction(ParameterError):
    pass


class DependentMasks(ParameterError):
    pass


class DependentComponents(ParameterError):
    pass


class FieldMismatch(ParameterError):
    pass


class EmptyKeepSet(ParameterError):
    pass


class ZeroInD(ParameterError):
    pass


class DimensionOne(ParameterError):
    pass


class TooLarge(MinCodesError):
    """An exhaustive computation would exceed its enumeration budget."""


class BudgetExceeded(TooLarge):
    pass


class ParseError(MinCodesError, ValueError):
    pass


class AiTooSmall(MinCodesError):
    """The algebraic-immunity hypothesis of a construction does not hold.

    The construction itself is still available as ``exc.result``; only the
    guarantee that depends on the hypothesis is missing.
    """

    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result


class DependentGeneratorsWarning(UserWarning):
    """Generator rows were linearly dependent; the code keeps its true rank."""
