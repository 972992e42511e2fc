"""Exception types shared across the package."""

#: Every value handled by the package must stay below this bound.
LIMIT = 1 << 63


class MoserError(Exception):
    """Base class for all package errors."""


class DomainError(MoserError, ValueError):
    """An argument lies outside the domain of the operation."""


class RangeError(MoserError, OverflowError):
    """A result would leave the 63-bit nonnegative range."""


class CapExhausted(MoserError, RuntimeError):
    """A bounded search finished without finding an answer."""


def checked(value: int) -> int:
    if not 0 <= value < LIMIT:
        raise RangeError(f"value {value} outside [0, 2^63)")
    return value
