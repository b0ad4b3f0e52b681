"""Error taxonomy shared by the library and the CLI exit-code mapping."""


class NpbError(Exception):
    """Base class for all library errors."""


class ParseError(NpbError):
    """Syntax or declaration error in an equation file (CLI exit code 2)."""

    def __init__(self, message, line=None, col=None):
        self.line = line
        self.col = col
        if line is not None:
            message = f"line {line}" + (f", col {col}" if col is not None else "") + f": {message}"
        super().__init__(message)


class DimensionError(NpbError):
    """Dimensional inconsistency: inhomogeneous equation or conflicting
    constant inference (CLI exit code 3)."""


class UnsupportedError(NpbError):
    """Input outside the supported fragment: irrational facet root,
    derivative order above two, non-power-law facet, stalled iteration
    (CLI exit code 4)."""


class InvariantError(NpbError):
    """Internal invariant violation (CLI exit code 5)."""


EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DIMENSION = 3
EXIT_UNSUPPORTED = 4
EXIT_INTERNAL = 5


def exit_code_for(exc: BaseException) -> int:
    """Map an exception to the documented CLI exit code."""
    if isinstance(exc, ParseError):
        return EXIT_PARSE
    if isinstance(exc, DimensionError):
        return EXIT_DIMENSION
    if isinstance(exc, UnsupportedError):
        return EXIT_UNSUPPORTED
    return EXIT_INTERNAL
