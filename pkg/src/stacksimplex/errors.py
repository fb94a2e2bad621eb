"""Exception types shared across the package."""


class EmptyPermutation(ValueError):
    """Raised when a permutation would have no entries."""


class NotABijection(ValueError):
    """Raised when entries are not a bijection onto {1, ..., n}."""


class MalformedToken(ValueError):
    """Raised when a permutation string contains a non-positive-integer token."""


class TooShort(ValueError):
    """Raised when a permutation is below the minimum length for an operation."""


class NotOnHyperplane(ValueError):
    """Raised for a point whose coordinate sum is not 1 + 2 + ... + n."""


class DimensionMismatch(ValueError):
    """Raised when an orbit's affine dimension disagrees with its index."""


class ZeroDimensional(ValueError):
    """Raised when a facet is requested from a single-point simplex."""


class PointOutside(ValueError):
    """Raised when a point that must lie in a simplex does not."""


class NegativeHStar(ValueError):
    """Raised when an h* transform yields a negative or fractional entry."""


class BudgetExceeded(RuntimeError):
    """Raised when an enumeration exceeds its candidate budget.

    Attributes carry the limit and the number of candidates visited when
    the computation was abandoned, so callers can report partial work.
    """

    def __init__(self, limit: int, visited: int):
        super().__init__(f"candidate budget exceeded: visited {visited} of {limit}")
        self.limit = limit
        self.visited = visited
