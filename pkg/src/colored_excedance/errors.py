"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument is outside the domain of the operation."""


class ParseError(ValueError):
    """Text input could not be parsed.

    ``position`` is the 1-based character offset of the offending input when
    known, and ``token`` the offending token.
    """

    def __init__(self, message, position=None, token=None):
        super().__init__(message)
        self.position = position
        self.token = token


class GuardError(RuntimeError):
    """A computation was refused because it would exceed a size guard."""


class CrossCheckError(AssertionError):
    """Two independent counting routes disagreed."""
