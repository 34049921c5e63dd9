"""Exception hierarchy. Every error carries a machine-readable ``code`` and
the CLI exit status it maps to."""


class SignedChromError(Exception):
    code = "error"
    exit_code = 1


class DimensionError(SignedChromError, ValueError):
    code = "dimension_mismatch"


class ValidationError(SignedChromError, ValueError):
    code = "validation"


class ParseError(SignedChromError, ValueError):
    code = "parse"

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class UnsupportedEdgeError(SignedChromError, ValueError):
    """Raised when a free loop or positive loop reaches code that needs a
    hyperplane for every edge."""
    code = "unsupported_edge"


class CapacityError(SignedChromError):
    code = "capacity"
    exit_code = 2


class ConsistencyError(SignedChromError, AssertionError):
    code = "internal_consistency"
