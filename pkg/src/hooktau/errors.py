"""Exception types shared across the package."""


class HooktauError(Exception):
    """Base class for failures raised by this package."""


class CellOutOfShapeError(HooktauError, ValueError):
    """A (row, column) cell lies outside the partition diagram."""


class BruteForceBoundError(HooktauError, ValueError):
    """Exhaustive search was requested beyond its configured bound."""


class WeightMismatchError(HooktauError, ValueError):
    """A partition's weight disagrees with the stated word length."""


class OddParameterError(HooktauError, ValueError):
    """A parameter that must be a positive even integer was not."""


class ParameterOrderError(HooktauError, ValueError):
    """Integer parameters violate the required ordering (n >= q >= p >= 1)."""


class SeriesPoleError(HooktauError, ArithmeticError):
    """A Pochhammer denominator vanished where the numerator did not."""


class DivergentIntegralError(HooktauError, ValueError):
    """The requested moment integral does not converge."""


class DivergentDeformationError(HooktauError, ValueError):
    """A tau deformation breaks integrability on an infinite interval."""


class PrecisionNotReachedError(HooktauError, ArithmeticError):
    """Quadrature could not certify the requested number of digits."""

    def __init__(self, message, achieved_digits=None):
        super().__init__(message)
        self.achieved_digits = achieved_digits


class StepSizeUnderflowError(HooktauError, ArithmeticError):
    """Finite-difference steps fell below the cancellation floor."""


class DerivativeOrderError(HooktauError, ValueError):
    """A sampled function lacks the derivative orders an equation needs."""


class MasterEquationError(HooktauError, ArithmeticError):
    """First-integral check rejected: the third-order equation fails first."""


class SeriesDivergenceError(HooktauError, ValueError):
    """Series evaluation was requested outside the certified region."""
