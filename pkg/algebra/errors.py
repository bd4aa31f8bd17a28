class AlgebraError(Exception):
    """Base class of every error raised by the algebra, hermite, qsp and numeric packages."""


class NonExactDivisionError(AlgebraError):
    """A division that must be exact left a nonzero remainder."""


class AsymmetricLaurentError(AlgebraError):
    """A Laurent polynomial in `z` is not invariant under `z -> 1/z`."""


class ParameterError(AlgebraError, ValueError):
    """An argument violates the precondition of an operation."""


class CartanDatumError(AlgebraError, ValueError):
    """A Cartan datum violates one or more of its invariants.

    Args:
        `violations` (list[str]): Every violated invariant, in the order they were found.
    """

    def __init__(self, violations: list[str]):
        self.violations = list(violations)
        super().__init__('; '.join(self.violations))


class NumericParamsError(AlgebraError, ValueError):
    """Numeric parameters are outside the admissible range."""
