"""Exception types shared across the package."""


class InvalidInput(ValueError):
    """Raised when an argument violates an operation's precondition."""


class NoPerfectMatching(InvalidInput):
    """Raised when a graph that must have a perfect matching has none."""


class NotNice(ValueError):
    """Raised when a perfect matching is required to be nice but is not."""


class FormatError(InvalidInput):
    """Malformed graph, matching or trace file.

    ``lineno`` is 1-based, or 0 when the problem is not tied to a line.
    """

    def __init__(self, message, lineno=0):
        self.lineno = lineno
        prefix = f"line {lineno}: " if lineno else ""
        super().__init__(prefix + message)
