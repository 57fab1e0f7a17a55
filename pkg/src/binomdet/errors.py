"""Exception types raised across the package."""


class BinomdetError(ValueError):
    pass


class InvalidSequence(BinomdetError):
    """A sequence violates the triangular-order constraints for its partition."""


class LengthMismatch(BinomdetError):
    pass


class AmbiguousDistance(BinomdetError):
    """Both slope-1 lines meet the opposite path in distinct segments."""


class InvariantViolation(RuntimeError):
    """A mathematical invariant failed; the message names it."""

    def __init__(self, invariant: str, detail: str = ""):
        self.invariant = invariant
        super().__init__(f"{invariant}: {detail}" if detail else invariant)
