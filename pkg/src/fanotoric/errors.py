"""Exception types shared across the library."""


class FanoToricError(Exception):
    """Base class for all errors raised by this package."""


class NotSmoothError(FanoToricError):
    """The operation needs a nonsingular ambient variety (Cartier data unavailable)."""


class CayleyRestrictionError(FanoToricError):
    """A projected divisor simplex is not a dilate of the standard simplex."""


class DegreeMismatchError(FanoToricError):
    """Chern-class degrees do not add up to the dimension being integrated over."""


class DimensionMismatchError(FanoToricError):
    """Polytopes or classes of incompatible dimension were mixed."""


class BudgetExceededError(FanoToricError):
    """A combinatorial search exceeded its configured node budget."""


class ProblemValidationError(FanoToricError):
    """A problem file failed validation; carries the full list of issues."""

    def __init__(self, issues):
        self.issues = list(issues)
        super().__init__("; ".join(self.issues))
