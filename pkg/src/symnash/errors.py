"""Exception hierarchy shared by every module."""


class SymNashError(Exception):
    """Base class for all library errors."""


class ZeroVector(SymNashError, ValueError):
    pass


class DimensionMismatch(SymNashError, ValueError):
    pass


class NotAMixedStrategy(SymNashError, ValueError):
    pass


class MalformedProgram(SymNashError, ValueError):
    pass


class PrimaryNotOptimal(SymNashError):
    pass


class TooLarge(SymNashError, ValueError):
    pass


class DegenerateGame(SymNashError):
    """The game has a continuum of equilibria, so counting is meaningless."""


class RankExceedsOne(SymNashError, ValueError):
    pass


class FixedPointNotFound(SymNashError, RuntimeError):
    pass


class PreconditionViolated(SymNashError, ValueError):
    pass


class InternalInvariantViolation(SymNashError, AssertionError):
    """A guarantee that should hold mathematically was broken (a bug)."""


class NotAnEquilibrium(SymNashError, ValueError):
    pass


class NotFullSupport(SymNashError):
    pass


class NonPositiveMatrix(SymNashError, ValueError):
    pass


class ParseError(SymNashError, ValueError):
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
