"""Exception types shared across the package.

The CLI maps UsageError (and subclasses) to exit code 1 and OSError to
exit code 2; everything else is a bug.
"""


class UsageError(ValueError):
    """Caller violated a documented precondition or passed bad parameters."""


class ParseError(UsageError):
    """A structured input file is malformed."""

    def __init__(self, message: str, path=None, line: int | None = None):
        self.path = path
        self.line = line
        where = ""
        if path is not None:
            where = f"{path}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)


class AlignmentError(UsageError):
    """Subword sequence does not decode back to the given words."""
