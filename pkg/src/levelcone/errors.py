"""Exception types raised by levelcone.

Every error is a ``ValueError`` subclass so callers that only care about
"bad input" can catch one thing.
"""


class LevelConeError(ValueError):
    pass


class NotDivisible(LevelConeError):
    """S-polynomial is not divisible by (1-t)^p."""


class EmptyColumn(LevelConeError):
    def __init__(self, column):
        super().__init__(f"column {column} has no nonzero entries")
        self.column = column


class NotSingleEntry(LevelConeError):
    def __init__(self, column):
        super().__init__(f"column {column} does not have exactly one nonzero entry")
        self.column = column


class DivisionBySharedShift(LevelConeError):
    pass


class NoConsistentFill(LevelConeError):
    pass


class NotIncreasing(LevelConeError):
    pass


class OutOfRange(LevelConeError):
    pass


class NotInCone(LevelConeError):
    pass


class NotShiftSeparated(LevelConeError):
    pass


class ShapeError(LevelConeError):
    pass


class NegativeEntry(LevelConeError):
    def __init__(self, column, row):
        super().__init__(f"cancellation drives entry ({column},{row}) negative")
        self.column = column
        self.row = row


class NotACancellation(LevelConeError):
    pass


class NotLevelShape(LevelConeError):
    pass


class NoSignChange(LevelConeError):
    pass


class NotModuleHVector(LevelConeError):
    def __init__(self, index):
        super().__init__(f"a_{index} < 0: not a rational multiple of a module h-vector")
        self.index = index


class ZeroPolynomial(LevelConeError):
    pass


class NotOSequence(LevelConeError):
    pass


class CertificateFailed(LevelConeError):
    pass
