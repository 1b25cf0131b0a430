"""Exception types raised by the library.

``AlgebraError`` covers mathematically degenerate inputs (the CLI maps it to
exit code 2); ``ParseError`` covers malformed polynomial text (exit code 1).
"""


class AlgebraError(ValueError):
    """Input is well formed but outside the domain of an operation."""


class InfiniteSolutionSet(AlgebraError):
    def __init__(self, message: str = "solution set not finite"):
        super().__init__(message)


class ChartSearchExhausted(AlgebraError):
    def __init__(self, message: str = "no chart found in search budget"):
        super().__init__(message)


class ParseError(ValueError):
    def __init__(self, message: str, column: int):
        super().__init__(f"{message} at column {column}")
        self.reason = message
        self.column = column
