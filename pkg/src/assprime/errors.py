"""Exception hierarchy shared by the library and the command line."""


class AssPrimeError(Exception):
    """Base class for every error raised by this package."""

    exit_code = 2


class RingMismatchError(AssPrimeError, ValueError):
    """Operands live in different rings."""


class JoinError(AssPrimeError, ValueError):
    """Rings cannot be joined because their variable names overlap."""


class DomainError(AssPrimeError, ValueError):
    """An operation was called outside its domain (zero ideal, unit ideal, ...)."""


class ContainmentError(AssPrimeError, ValueError):
    """A required ideal containment V <= U does not hold."""


class ResourceError(AssPrimeError):
    """A size guard refused an instance that would be too expensive."""

    exit_code = 4


class ExponentOverflowError(ResourceError, OverflowError):
    """An exponent left the machine-width range."""


class TruncationError(AssPrimeError, ValueError):
    """A polynomial degree exceeds the truncation degree of a Groebner basis."""


class UnknownNameError(AssPrimeError, KeyError):
    """A named ideal, example or registry case does not exist."""

    def __str__(self):
        return str(self.args[0]) if self.args else ""


class ParseError(AssPrimeError):
    """Syntax error in an ideal file, with a 1-based position."""

    exit_code = 3

    def __init__(self, message, line, column, expected=()):
        self.message = message
        self.line = line
        self.column = column
        self.expected = tuple(expected)
        text = f"line {line}, col {column}: {message}"
        if self.expected:
            text += f" (expected {', '.join(self.expected)})"
        super().__init__(text)


class TheoremViolation(AssPrimeError, AssertionError):
    """A proven identity failed on a concrete instance; always an implementation bug."""

    exit_code = 5
