"""Exception hierarchy shared by every subpackage.

Each error carries the process exit code the command-line front end maps it
to: 1 for usage and parse problems, 2 for construction or verification
failures, 3 for delivery and decode failures.
"""

from typing import Any, Optional, Tuple


class MadccError(Exception):
    """Base class for all library errors."""

    exit_code = 1


class InvalidParametersError(MadccError, ValueError):
    """Raised when parameters fall outside an operation's domain."""


class OutOfRangeError(InvalidParametersError):
    """Raised when a closed form is evaluated outside its valid range."""


class UnsupportedFieldError(InvalidParametersError):
    """Raised when no finite field of the requested order is available."""


class NotApplicableError(MadccError, ValueError):
    """Raised when an operation does not apply to the given structure."""


class MalformedInputError(MadccError, ValueError):
    """Raised by the text parsers; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: Optional[int] = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class DuplicateRowsError(MadccError, ValueError):
    exit_code = 2


class PreconditionFailedError(MadccError, ValueError):
    exit_code = 2


class ConstructionUnsupportedError(MadccError, RuntimeError):
    """Raised when a built array fails the PDA/DPDA checker.

    ``report`` holds the checker's ``PdaReport`` when one exists.
    """

    exit_code = 2

    def __init__(self, message: str, report: Any = None):
        super().__init__(message)
        self.report = report


class ConsistencyViolationError(MadccError, RuntimeError):
    """Raised when a delivery star disagrees with what a user can retrieve."""

    exit_code = 2

    def __init__(self, message: str, cell: Optional[Tuple[int, int]] = None):
        super().__init__(message)
        self.cell = cell


class ProtocolViolationError(MadccError, RuntimeError):
    """Raised when a sender cannot retrieve a packet it has to XOR."""

    exit_code = 3

    def __init__(self, message: str, label: int, sender: int, row: int):
        super().__init__(message)
        self.label = label
        self.sender = sender
        self.row = row


class DecodeFailureError(MadccError, RuntimeError):
    """Raised when a user cannot recover a packet of its demanded file."""

    exit_code = 3

    def __init__(self, message: str, user: int, row: int, label: Optional[int] = None):
        super().__init__(message)
        self.user = user
        self.row = row
        self.label = label

    @property
    def witness(self) -> Tuple[int, int, Optional[int]]:
        return self.user, self.row, self.label
