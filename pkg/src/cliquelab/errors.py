"""Exception hierarchy shared by all cliquelab modules."""


class CliquelabError(Exception):
    """Base class for all cliquelab errors."""


class InvalidParameterError(CliquelabError):
    """A precondition on an argument was violated."""


class ResourceLimitError(CliquelabError):
    """A lookup table or memory budget would be exceeded.

    Carries enough detail to report what was requested vs. allowed.
    """

    def __init__(self, message: str, required: int | None = None,
                 allowed: int | None = None):
        super().__init__(message)
        self.required = required
        self.allowed = allowed


class InternalInconsistencyError(CliquelabError):
    """A detector contradicted itself (e.g. during witness halving)."""


class ParseError(CliquelabError):
    """Malformed input file; reports the offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line
