"""Exception types raised across the package."""


class TiltRollError(Exception):
    """Base class for all package errors."""


class NotAdmissibleCut(TiltRollError):
    pass


class TruncationTooSmall(TiltRollError):
    pass


class NotSchurian(TiltRollError):
    pass


class DimensionMismatch(TiltRollError):
    pass


class InconsistentSystem(TiltRollError):
    pass


class NotSymmetric(TiltRollError):
    pass


class CyclicQuiver(TiltRollError):
    pass


class CompanionMismatch(TiltRollError):
    pass


class NotIndecomposable(TiltRollError):
    pass


class NotDynkin(TiltRollError):
    pass


class WindowTooSmall(TiltRollError):
    pass


class NotBasic(TiltRollError):
    pass


class GldimTooLarge(TiltRollError):
    pass


class GradingMismatch(TiltRollError):
    pass


class PotentialNotDecreasing(TiltRollError):
    pass


class MaxStepsExceeded(TiltRollError):
    pass


class NotClusterQuiver(TiltRollError):
    pass


class SearchExhausted(TiltRollError):
    pass


class ParseError(TiltRollError):
    """Malformed input file; carries line and column when known."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
