"""Exception hierarchy shared by every trimin package."""

import logging

# Configure logging
logger = logging.getLogger(__name__)

# Exit codes used by the command-line surface
EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2


class TriminError(Exception):
    """Base class for all trimin errors"""
    exit_code = EXIT_USAGE

    def __init__(self, detail="trimin operation failed"):
        super().__init__(detail)
        self.detail = detail


class OrderLimitError(TriminError):
    """Exception raised when a graph order or level exceeds a hard cap"""
    def __init__(self, detail="Graph order exceeds the supported limit"):
        super().__init__(detail)


class Graph6FormatError(TriminError):
    """Exception raised when graph6 input is malformed"""
    def __init__(self, detail="Malformed graph6 input", offset: int = 0, line: int = 0):
        if line:
            detail = f"{detail} (line {line}, byte offset {offset})"
        else:
            detail = f"{detail} (byte offset {offset})"
        super().__init__(detail)
        self.offset = offset
        self.line = line


class TypeMismatchError(TriminError):
    """Exception raised when flags or combinations of different types are mixed"""
    def __init__(self, detail="Flag types do not match"):
        super().__init__(detail)


class LevelOverflowError(TriminError):
    """Exception raised when a product or lift would exceed the maximum level"""
    def __init__(self, detail="Flag level exceeds the supported maximum"):
        super().__init__(detail)


class UnsupportedAveragingError(TriminError):
    """Exception raised for an averaging operator between unsupported types"""
    def __init__(self, detail="Averaging between these types is not supported"):
        super().__init__(detail)


class DomainError(TriminError):
    """Exception raised when a numeric argument lies outside its domain"""
    def __init__(self, detail="Argument outside the valid domain"):
        super().__init__(detail)


class PreconditionError(TriminError):
    """Exception raised when an operation's precondition does not hold"""
    def __init__(self, detail="Operation precondition violated"):
        super().__init__(detail)


class ConstructionError(TriminError):
    """Exception raised when an extremal construction is given invalid parts"""
    def __init__(self, detail="Invalid construction parameters"):
        super().__init__(detail)


def handle_error(exc: BaseException) -> int:
    """Map an exception raised during a run to a process exit code"""
    if isinstance(exc, TriminError):
        logger.error(f"{type(exc).__name__}: {exc.detail}")
        return exc.exit_code
    logger.error(f"Unhandled exception: {exc}", exc_info=True)
    return EXIT_VERIFICATION_FAILED
