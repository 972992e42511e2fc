"""Solvers for the unique representations value(k) + r*value(l) = N."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .radix import expand, from_digits
from .sequences import SequenceFamily


@dataclass(frozen=True)
class DecompositionPair:
    k: int
    l: int
    family: SequenceFamily

    def terms(self) -> tuple[int, int]:
        return self.family.value(self.k), self.family.value(self.l)

    def recombine(self) -> int:
        u, v = self.terms()
        return u + self.family.multiplier * v

    def __iter__(self):
        yield self.k
        yield self.l


def decompose_moser(n: int, r: int = 2) -> DecompositionPair:
    """k takes the even-position digits of n, l the odd-position ones."""
    e = expand(n, r)
    return DecompositionPair(from_digits(e.even_digits(), r), from_digits(e.odd_digits(), r),
                             SequenceFamily("moser", r=r))


def decompose_s(N: int, r: int = 2) -> DecompositionPair:
    if N < r + 1 or N % r != 1 % r:
        raise DomainError(f"N must satisfy N = 1 (mod {r}) and N >= {r + 1}, got {N}")
    e = expand(N - r, r)
    even, odd = e.even_digits(), e.odd_digits()
    # N - r = 1 (mod r), so the lowest digit is always 1
    assert even and even[0] == 1, (N, r, e.digits)
    k = 1 + from_digits(odd, r)
    l = 1 + from_digits(even[1:], r)
    return DecompositionPair(k, l, SequenceFamily("s", r=r))


def decompose_shifted(N: int, c: int = 3) -> DecompositionPair:
    family = SequenceFamily("shifted", c=c)
    if N % 2 == 0 or N < 3 * c:
        raise DomainError(f"N must be odd and >= {3 * c}, got {N}")
    k, l = decompose_moser((N - 3 * c) // 2, 2)
    return DecompositionPair(k, l, family)


def oracle_decompose(N: int, family: SequenceFamily) -> list[DecompositionPair]:
    """Every (k, l) with value(k) + multiplier*value(l) = N, by exhaustive scan.

    Uses only the family's term list, never the digit inversions above.
    """
    if family.kind == "t":
        raise DomainError("the t family has no value(k) + r*value(l) representation")
    values = family.values_upto(N)
    index_of = {v: i + family.first_index for i, v in enumerate(values)}
    found = []
    for j, v in enumerate(values):
        rest = N - family.multiplier * v
        if rest < 0:
            break
        if rest in index_of:
            found.append(DecompositionPair(index_of[rest], j + family.first_index, family))
    return sorted(found, key=lambda p: (p.k, p.l))
