"""Exception types shared across the package."""


class InputError(ValueError):
    """A caller-supplied argument violates a documented precondition."""


class ParseError(InputError):
    """Malformed graph file. Carries the 1-based offending line number."""

    def __init__(self, message: str, line_no: int | None = None):
        self.line_no = line_no
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)


class UnsupportedCaseError(InputError):
    """Requested a closed form outside the parameter range it is stated for."""


class ResourceLimitError(RuntimeError):
    """A configured size cap would be exceeded."""


class InternalError(RuntimeError):
    """A bounded internal iteration failed to converge; indicates a bug."""
