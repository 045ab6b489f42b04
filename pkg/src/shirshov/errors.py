"""Exception hierarchy shared by the engine and the command line."""


class ShirshovError(Exception):
    """Base class for every error raised by this package."""


class AlphabetError(ShirshovError, ValueError):
    """Unknown, duplicate or foreign letters."""


class NotALSWError(ShirshovError, ValueError):
    pass


class NotLieError(ShirshovError, ValueError):
    """An associative polynomial that is not the expansion of a Lie element."""


class NonUnitError(ShirshovError, ArithmeticError):
    """A division by a non-unit was required while working over the integers."""


class ZeroPolynomialError(ShirshovError, ValueError):
    pass


class UnverifiedBasisError(ShirshovError):
    pass


class BoundExceededError(ShirshovError, ValueError):
    pass


class IncompleteSystemError(ShirshovError):
    pass


class PresentationSyntaxError(ShirshovError, ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
