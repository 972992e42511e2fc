"""Moser-type sequences and the families derived from them.

Every family has a per-index closed form built from digit interleaving and,
where one exists, a prefix generator driven by the additive recursion on the
r-adic valuation. The two paths are kept separate so they can check each other.
"""

from __future__ import annotations

import heapq
import itertools
import math
from dataclasses import dataclass
from typing import Iterator

from .errors import DomainError, RangeError, checked
from .radix import spread, valuation

FAMILIES = ("moser", "s", "shifted", "affine", "t")


def _check_base(r: int) -> None:
    if r < 2:
        raise DomainError(f"base must be >= 2, got {r}")


def _check_c(c: int) -> None:
    if c < 3 or c % 2 == 0:
        raise DomainError(f"c must be odd and >= 3, got {c}")


def moser(n: int, r: int = 2) -> int:
    """m_r(n): the base-r digits of n placed at even positions."""
    _check_base(r)
    if n < 0:
        raise DomainError(f"index must be >= 0, got {n}")
    return spread(n, r, 2, 0)


def s_term(n: int, r: int = 2) -> int:
    """s_n = r*m_r(n-1) + 1, i.e. the digits of n-1 moved to odd positions, plus one."""
    _check_base(r)
    if n < 1:
        raise DomainError(f"index must be >= 1, got {n}")
    return checked(spread(n - 1, r, 2, 1) + 1)


def s_term_via_moser(n: int, r: int = 2) -> int:
    if n < 1:
        raise DomainError(f"index must be >= 1, got {n}")
    return checked(r * moser(n - 1, r) + 1)


def iter_moser(r: int = 2) -> Iterator[int]:
    """m_r(0), m_r(1), ... by the valuation recursion."""
    _check_base(r)
    value, n = 0, 0
    yield value
    while True:
        n += 1
        tau = valuation(n, r)
        value = checked(value + (r ** (2 * tau + 1) + 1) // (r + 1))
        yield value


def iter_s(r: int = 2) -> Iterator[int]:
    """s_1, s_2, ... by the valuation recursion."""
    _check_base(r)
    value, n = 1, 1
    yield value
    while True:
        n += 1
        t = valuation(n - 1, r)
        value = checked(value + (r ** (2 * (t + 1)) + r) // (r + 1))
        yield value


def moser_prefix(count: int, r: int = 2) -> list[int]:
    if count < 1:
        raise DomainError(f"count must be >= 1, got {count}")
    return list(itertools.islice(iter_moser(r), count))


def s_prefix(count: int, r: int = 2) -> list[int]:
    if count < 1:
        raise DomainError(f"count must be >= 1, got {count}")
    return list(itertools.islice(iter_s(r), count))


def shifted_a(n: int, c: int = 3) -> int:
    """a^(c)(n) = 2*m_2(n) + c."""
    _check_c(c)
    return checked(2 * moser(n, 2) + c)


def affine_s(n: int, a: int = 1, b: int = 1) -> int:
    """s_n(a, b) = a + b*(s_n - 1) over the r = 2 s-sequence."""
    if a < 1 or b < 1:
        raise DomainError(f"a and b must be positive, got a={a}, b={b}")
    return checked(a + b * (s_term(n, 2) - 1))


def iter_t() -> Iterator[int]:
    """The nondecreasing merge of s(1,1) and s(1,2); 1 occurs twice."""
    ones = (1 + (s - 1) for s in iter_s(2))
    twos = (1 + 2 * (s - 1) for s in iter_s(2))
    return heapq.merge(ones, twos)


def t_prefix(count: int) -> list[int]:
    if count < 1:
        raise DomainError(f"count must be >= 1, got {count}")
    return list(itertools.islice(iter_t(), count))


def t_term(n: int) -> int:
    if n < 1:
        raise DomainError(f"index must be >= 1, got {n}")
    return t_prefix(n)[-1]


def counting(x: int, r: int = 2) -> int:
    """Number of s-terms not exceeding x."""
    count = 0
    for s in iter_s(r):
        if s > x:
            return count
        count += 1


def power_boundary(r: int, t: int) -> tuple[int, int]:
    """(s_{r^t}, s_{r^t + 1}); the second is exactly r + 1 times the first."""
    _check_base(r)
    if t < 0:
        raise DomainError(f"t must be >= 0, got {t}")
    high = checked(r ** (2 * t + 1) + 1)
    low, rem = divmod(high, r + 1)
    assert rem == 0
    return low, high


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for p in range(3, math.isqrt(n) + 1, 2):
        if n % p == 0:
            return False
    return True


def composite_witnesses(c: int, count: int, max_index: int = 10**4) -> list[tuple[int, int]]:
    """The first `count` composite terms of a^(c), as (index, value) pairs."""
    _check_c(c)
    if count < 1:
        raise DomainError(f"count must be >= 1, got {count}")
    found = []
    for n in range(max_index):
        value = shifted_a(n, c)
        if not is_prime(value):
            found.append((n, value))
            if len(found) == count:
                return found
    raise RangeError(f"only {len(found)} composite terms among the first {max_index} indices")


def prime_census(c: int, count: int) -> tuple[int, int]:
    """(primes, composites) among a^(c)(0..count-1)."""
    primes = sum(is_prime(shifted_a(n, c)) for n in range(count))
    return primes, count - primes


@dataclass(frozen=True)
class SequenceFamily:
    """One of the sequence families together with its parameters.

    `multiplier` is the coefficient of the second summand in the unique
    representation value(k) + multiplier*value(l).
    """

    kind: str
    r: int = 2
    c: int = 3
    a: int = 1
    b: int = 1

    def __post_init__(self) -> None:
        if self.kind not in FAMILIES:
            raise DomainError(f"unknown family {self.kind!r}; expected one of {FAMILIES}")
        _check_base(self.r)
        if self.kind in ("shifted", "affine", "t") and self.r != 2:
            raise DomainError(f"family {self.kind!r} is defined for r = 2 only")
        if self.kind == "shifted":
            _check_c(self.c)
        if self.kind == "affine" and (self.a < 1 or self.b < 1):
            raise DomainError("a and b must be positive")

    @property
    def first_index(self) -> int:
        return 0 if self.kind in ("moser", "shifted") else 1

    @property
    def multiplier(self) -> int:
        return self.r

    def value(self, n: int) -> int:
        if self.kind == "moser":
            return moser(n, self.r)
        if self.kind == "s":
            return s_term(n, self.r)
        if self.kind == "shifted":
            return shifted_a(n, self.c)
        if self.kind == "affine":
            return affine_s(n, self.a, self.b)
        return t_term(n)

    def iter_values(self) -> Iterator[int]:
        """Terms from first_index onward, via the recursion where one exists."""
        if self.kind == "moser":
            return iter_moser(self.r)
        if self.kind == "s":
            return iter_s(self.r)
        if self.kind == "shifted":
            return (2 * m + self.c for m in iter_moser(2))
        if self.kind == "affine":
            return (self.a + self.b * (s - 1) for s in iter_s(2))
        return iter_t()

    def prefix(self, count: int, offset: int | None = None) -> list[int]:
        """`count` consecutive terms starting at index `offset`."""
        start = self.first_index if offset is None else offset
        if start < self.first_index:
            raise DomainError(f"offset must be >= {self.first_index} for {self.kind!r}")
        if count < 0:
            raise DomainError(f"count must be >= 0, got {count}")
        skip = start - self.first_index
        return [checked(v) for v in itertools.islice(self.iter_values(), skip, skip + count)]

    def values_upto(self, x: int) -> list[int]:
        return list(itertools.takewhile(lambda v: v <= x, self.iter_values()))

    def __str__(self) -> str:
        if self.kind in ("moser", "s"):
            return f"{self.kind}(r={self.r})"
        if self.kind == "shifted":
            return f"shifted(c={self.c})"
        if self.kind == "affine":
            return f"affine(a={self.a}, b={self.b})"
        return "t"
