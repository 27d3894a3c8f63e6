"""Exception types raised across the divpoly toolkit."""

from typing import List, Optional


class DivpolyError(Exception):
    """Base class for all divpoly errors."""


class ContractViolation(DivpolyError, ValueError):
    """An operation was called outside its precondition."""


class UsageError(DivpolyError):
    """Command-line misuse that the argument parser cannot catch."""


class BFileError(DivpolyError):
    """Problem reading an OEIS b-file."""


class BFileParseError(BFileError):
    """A b-file line is not of the form ``n a(n)``, or the file has no entries."""

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class BFileStructureError(BFileError):
    """Indices are repeated, out of order, or absent."""

    def __init__(self, message: str, gaps: Optional[List[int]] = None):
        self.gaps = list(gaps or [])
        super().__init__(message)


def require(condition: bool, message: str) -> None:
    """Raise ContractViolation with ``message`` unless ``condition`` holds."""
    if not condition:
        raise ContractViolation(message)
