"""Exception types shared across the package."""


class InvalidParameterError(ValueError):
    """An argument is outside the domain of the operation."""


class NoPerfectMatchingError(InvalidParameterError):
    """The requested graph has no perfect matching (odd order)."""


class CompletionError(Exception):
    """A partial matching cannot be extended to a perfect matching."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class InvalidCertificateError(ValueError):
    """A cut certificate does not agree with the graph it is checked against."""


class BudgetExceeded(Exception):
    """A node or time budget ran out before a search finished.

    Never a refutation: the search space was not exhausted.
    """

    def __init__(self, message, progress=None):
        super().__init__(message)
        self.progress = progress or {}


class FormatError(InvalidParameterError):
    """Malformed graph or matching input; the message names the line or field."""
