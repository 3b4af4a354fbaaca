"""Exception types raised across the package."""


class RankinError(Exception):
    pass


class InvalidArgumentError(RankinError, ValueError):
    pass


class DimensionMismatchError(InvalidArgumentError):
    pass


class UndefinedBoundError(RankinError, ValueError):
    """Raised when a supremum over distinct atom pairs ranges over nothing."""


class NormalizationError(RankinError, ValueError):
    pass


class PreconditionViolation(RankinError):
    """Raised instead of a verdict when a family fails the theorem's hypotheses.

    ``failures`` maps a condition name to a human readable description of
    how badly it failed.
    """

    def __init__(self, failures):
        self.failures = dict(failures)
        detail = "; ".join(f"{k}: {v}" for k, v in self.failures.items())
        super().__init__(f"precondition violated ({detail})")
