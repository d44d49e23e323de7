"""Exceptions raised by afsa."""
from typing import Optional


class AfsaError(Exception):
    """Base class for every error raised by the library."""
    pass


class FrameParseError(AfsaError):
    """Raised when a frame document is malformed or references unknown ids."""

    def __init__(self, message: str, line: int, column: int = 1):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f'line {line}, column {column}: {message}')


class InvalidFrameworkError(AfsaError):
    """Raised when an operation needs a framework that passes validation."""

    def __init__(self, report, message: Optional[str] = None):
        self.report = report
        if message is None:
            details = '; '.join(v.message for v in report.violations)
            message = f'invalid framework: {details}'
        super().__init__(message)


class CapExceededError(AfsaError):
    """Raised when a brute-force enumeration would exceed its cap."""

    def __init__(self, required: int, cap: int):
        self.required = required
        self.cap = cap
        super().__init__(f'enumeration needs {required} assignments, cap is {cap}')


class UnboundVariableError(AfsaError):
    """Raised when an assignment or labelling misses a variable."""

    def __init__(self, name: str):
        self.name = name
        super().__init__(f'unbound variable {name}')


class DomainValueError(AfsaError):
    """Raised for truth values outside [0, 1] or inconsistent labelling domains."""
    pass
