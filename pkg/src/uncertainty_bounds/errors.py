"""Exception hierarchy shared by every module of the package."""


class BoundsError(Exception):
    """Base class for all errors raised by this package."""


class NotHermitian(BoundsError, ValueError):
    pass


class BadDimension(BoundsError, ValueError):
    pass


class DimensionMismatch(BoundsError, ValueError):
    pass


class NotNormalized(BoundsError, ValueError):
    pass


class NotDensityMatrix(BoundsError, ValueError):
    pass


class NonRealExpectation(BoundsError, ArithmeticError):
    pass


class NonImaginaryCommutator(BoundsError, ArithmeticError):
    pass


class KindMismatch(BoundsError, TypeError):
    pass


class EmptyInput(BoundsError, ValueError):
    pass


class MixedStateUnsupported(BoundsError, TypeError):
    pass


class InvalidPerp(BoundsError, ValueError):
    pass


class NotQubit(BoundsError, ValueError):
    pass


class NegativeNormSquare(BoundsError, ArithmeticError):
    pass


class SingularSolve(BoundsError, ZeroDivisionError):
    pass


class ConstraintViolated(BoundsError, ValueError):
    """Free parameters do not reproduce the weights they were solved for."""


class DegenerateDecomposition(BoundsError, ValueError):
    """``a`` or ``b`` vanishes outside saturation-check mode."""


class LengthMismatch(BoundsError, ValueError):
    pass


class BadIndices(BoundsError, IndexError):
    pass


class OddCount(BoundsError, ValueError):
    pass


class BadFixtureShape(BoundsError, ValueError):
    pass


class BadParams(BoundsError, ValueError):
    pass


class InputSchemaError(BoundsError, ValueError):
    pass
