"""Base-r digit expansion, least significant digit first."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, checked


def _check_base(r: int) -> None:
    if r < 2:
        raise DomainError(f"base must be >= 2, got {r}")


@dataclass(frozen=True)
class RadixExpansion:
    base: int
    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_base(self.base)
        if any(not 0 <= d < self.base for d in self.digits):
            raise DomainError(f"digit out of range for base {self.base}: {self.digits}")
        if self.digits and self.digits[-1] == 0:
            raise DomainError("expansion has a trailing zero digit")

    def even_digits(self) -> tuple[int, ...]:
        """Digits at positions 0, 2, 4, ..."""
        return self.digits[0::2]

    def odd_digits(self) -> tuple[int, ...]:
        """Digits at positions 1, 3, 5, ..."""
        return self.digits[1::2]

    def __int__(self) -> int:
        return reassemble(self)


def expand(n: int, r: int) -> RadixExpansion:
    _check_base(r)
    if n < 0:
        raise DomainError(f"cannot expand negative integer {n}")
    digits = []
    while n:
        n, d = divmod(n, r)
        digits.append(d)
    return RadixExpansion(r, tuple(digits))


def from_digits(digits, r: int) -> int:
    """Evaluate sum(digits[i] * r**i); digits need not be canonical."""
    value = 0
    for d in reversed(list(digits)):
        value = checked(value * r + d)
    return value


def reassemble(e: RadixExpansion) -> int:
    return from_digits(e.digits, e.base)


def spread(n: int, r: int, stride: int = 2, shift: int = 0) -> int:
    """Place base-r digit i of n at position stride*i + shift.

    With stride 2 this is the digit interleaving behind the Moser numbers.
    """
    _check_base(r)
    value, weight, step = 0, r**shift, r**stride
    while n:
        n, d = divmod(n, r)
        value += d * weight
        weight *= step
    return checked(value)


def valuation(n: int, r: int) -> int:
    """Largest tau with r**tau dividing n."""
    _check_base(r)
    if n <= 0:
        raise DomainError(f"valuation undefined for {n}")
    tau = 0
    while n % r == 0:
        n //= r
        tau += 1
    return tau
