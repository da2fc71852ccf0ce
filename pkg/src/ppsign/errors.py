"""Exception types shared across the package."""


class PPSignError(Exception):
    """Base class for all errors raised by this package."""


class DimensionError(PPSignError, ValueError):
    """Matrix or argument dimensions are unusable (non-square, odd, mismatched)."""


class ShapeError(PPSignError, ValueError):
    """Box shape is incompatible with the requested symmetry class."""


class InvalidInputError(PPSignError, ValueError):
    """Input violates a documented precondition."""


class UnsupportedClassError(PPSignError, ValueError):
    """The operation is not defined for this symmetry class or parity case."""


class ResourceLimitError(PPSignError, RuntimeError):
    """A configured node/subset budget was exceeded; never a silent truncation."""


class SingularParameterError(PPSignError, ZeroDivisionError):
    """A parameter makes a denominator factor vanish."""


class DomainError(PPSignError, ValueError):
    """Arguments leave the domain where a formula is defined (e.g. (-1)!)."""


class NeedsMoreSamplesError(PPSignError, ValueError):
    """Polynomial reconstruction was handed too few sample points."""


class InternalConsistencyError(PPSignError, AssertionError):
    """Two routes that must agree exactly did not; indicates a bug."""
