"""Exception types shared across the package."""


class FieldCheckError(Exception):
    """Base class for all errors raised by this package."""


class DimensionError(FieldCheckError, ValueError):
    """A dimension outside the supported set {3, 4} was requested."""


class ShapeError(FieldCheckError, ValueError):
    """Tensor rank/dimension mismatch between operands."""


class InvariantError(FieldCheckError, ValueError):
    """A structural invariant (e.g. antisymmetry) is violated."""


class ValidationError(FieldCheckError, ValueError):
    """Malformed input data (boxes, CSV files, field files, ...)."""


class NotClosedError(FieldCheckError):
    """A form expected to be closed has a nonzero exterior derivative.

    The offending derivative is kept on the ``residual`` attribute so the
    caller can inspect what failed to vanish.
    """

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class CausalityError(FieldCheckError, ValueError):
    """A worldline segment moves at or above the speed of light."""


class InsufficientDataError(FieldCheckError, ValueError):
    """Too few samples for the finite-difference stencils."""


class DegenerateCellError(FieldCheckError, ValueError):
    """An integration cell has zero measure."""
