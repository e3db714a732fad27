"""Exception types shared across the package."""


class GeneralPositionError(ValueError):
    """Shapes share a coordinate where the predicates need strict order."""

    def __init__(self, message, pairs=()):
        super().__init__(message)
        self.pairs = list(pairs)


class DegenerateCrossingError(ValueError):
    """Two polylines meet non-transversally (touching, collinear overlap)."""

    def __init__(self, message, segments=None):
        super().__init__(message)
        self.segments = segments


class PartitionConditionError(ValueError):
    pass


class ImproperClassesError(ValueError):
    pass


class WeakColoringError(RuntimeError):
    """A weak colorer handed back a coloring that is not (k+1)-weak."""


class InvariantBreach(RuntimeError):
    """An internal invariant the construction relies on did not hold."""


class ResampleBudgetExceeded(RuntimeError):
    pass


class SearchCapExceeded(RuntimeError):
    pass


class PatternHypothesisError(ValueError):
    """A pattern family violates the declared lower bound l or upper bound l*s."""
