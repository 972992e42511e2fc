"""Collinearity of odd numbers and the counting function psi.

Every odd n > 1 is uniquely s_k + 2*s_l; (k, l) are its coordinates. Two odd
numbers are collinear when they share k or share l. The number 1 has no
coordinates and is collinear with nothing.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .decompose import decompose_s
from .errors import DomainError


def _check_odd(n: int) -> None:
    if n < 1 or n % 2 == 0:
        raise DomainError(f"expected a positive odd integer, got {n}")


@dataclass(frozen=True)
class OddCoordinates:
    n: int
    k: int
    l: int


def coordinates(n: int) -> OddCoordinates:
    _check_odd(n)
    if n == 1:
        raise DomainError("1 has no coordinates")
    k, l = decompose_s(n, 2)
    return OddCoordinates(n, k, l)


def collinear(m: int, n: int) -> bool:
    _check_odd(m)
    _check_odd(n)
    if m == 1 or n == 1:
        return False
    a, b = coordinates(m), coordinates(n)
    return a.k == b.k or a.l == b.l


def psi(n: int) -> int:
    """Number of odd i < n not collinear with n."""
    _check_odd(n)
    return sum(not collinear(i, n) for i in range(1, n, 2))


def psi_range(n_max: int) -> dict[int, int]:
    """psi(n) for every odd n <= n_max in one sweep.

    Since coordinates are unique, no i < n shares both k and l with n, so the
    collinear count is just (#earlier with the same k) + (#earlier with the same l).
    """
    if n_max < 1:
        raise DomainError(f"n_max must be >= 1, got {n_max}")
    result = {1: 0}
    by_k: Counter[int] = Counter()
    by_l: Counter[int] = Counter()
    for n in range(3, n_max + 1, 2):
        c = coordinates(n)
        earlier = (n - 1) // 2
        result[n] = earlier - by_k[c.k] - by_l[c.l]
        by_k[c.k] += 1
        by_l[c.l] += 1
    return result


def psi_pair_check(m: int) -> bool:
    """psi(4m - 1) == psi(4m + 1)."""
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    table = psi_range(4 * m + 1)
    return table[4 * m - 1] == table[4 * m + 1]
