"""Affine s-sequences, the merged sequence t and sums of two t-values."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .decompose import DecompositionPair, decompose_s
from .errors import CapExhausted, DomainError
from .sequences import SequenceFamily, affine_s, iter_s, iter_t, t_prefix

V_POLICIES = ("value", "index", "index-distinct")


def decompose_affine(N: int, a: int = 1, b: int = 1) -> DecompositionPair:
    """(k, l) with s_k(a,b) + 2*s_l(a,b) = N, for N = 3a + 2bn."""
    family = SequenceFamily("affine", a=a, b=b)
    shifted = N - 3 * a
    if shifted < 0 or shifted % (2 * b):
        raise DomainError(f"{N} is not of the form 3*{a} + 2*{b}*n")
    # s_k(a,b) + 2 s_l(a,b) = 3a + b(s_k + 2 s_l - 3)
    k, l = decompose_s(shifted // b + 3, 2)
    return DecompositionPair(k, l, family)


def _restricted_values(variant: str, r: int, bound: int) -> dict[int, int]:
    """Values s_j(1,b) at indices j = 2^(r-1)(i-1) + 1, keyed to i."""
    b = 1 if variant == "odd" else 2
    stride = 2 ** (r - 1)
    out = {}
    for i in itertools.count(1):
        v = affine_s(stride * (i - 1) + 1, 1, b)
        if v > bound:
            return out
        out[v] = i


def congruence_refinement_check(r: int, variant: str, bound: int) -> bool:
    """Check unique representability in a residue class using a thinned index set.

    variant "odd":  m = 3 (mod 2^(2r-1)) over s(1,1) at indices 2^(r-1)(i-1)+1;
    variant "even": m = 3 (mod 2^(2r))   over s(1,2) at the same indices.
    Every such m in [3, bound] must have exactly one representation u + 2v.
    """
    if r < 1:
        raise DomainError(f"r must be >= 1, got {r}")
    if variant not in ("odd", "even"):
        raise DomainError(f"variant must be 'odd' or 'even', got {variant!r}")
    if bound < 3:
        raise DomainError(f"bound must be >= 3, got {bound}")
    modulus = 2 ** (2 * r - 1) if variant == "odd" else 2 ** (2 * r)
    values = _restricted_values(variant, r, bound)
    for m in range(3, bound + 1, modulus):
        if m % modulus != 3 % modulus:
            continue
        hits = sum(1 for v in values if 2 * v <= m and (m - 2 * v) in values)
        if hits != 1:
            return False
    return True


def t_values(cap: int) -> list[int]:
    """Distinct t-values not exceeding cap, ascending."""
    return sorted(set(itertools.takewhile(lambda v: v <= cap, iter_t())))


@dataclass(frozen=True)
class RepresentationSet:
    target: int
    pairs: frozenset[tuple[int, int]]

    def __len__(self) -> int:
        return len(self.pairs)

    def sorted_pairs(self) -> list[tuple[int, int]]:
        return sorted(self.pairs)


def _check_even(N: int) -> None:
    if N < 2 or N % 2:
        raise DomainError(f"expected a positive even integer, got {N}")


def even_representations(N: int, cap: int | None = None) -> RepresentationSet:
    """All unordered value pairs {u, v} of t-values with u + v = N."""
    _check_even(N)
    cap = N if cap is None else cap
    if cap < N:
        raise DomainError(f"cap {cap} must be >= N = {N}")
    values = t_values(N)
    present = set(values)
    pairs = frozenset((u, N - u) for u in values if 2 * u <= N and N - u in present)
    return RepresentationSet(N, pairs)


def _representation_counts(bound: int) -> list[int]:
    """counts[N] = number of unordered value pairs of t-values summing to N."""
    values = t_values(bound)
    counts = [0] * (bound + 1)
    for i, u in enumerate(values):
        for v in values[i:]:
            if u + v > bound:
                break
            counts[u + v] += 1
    return counts


def unique_evens(bound: int) -> list[int]:
    if bound < 2:
        raise DomainError(f"bound must be >= 2, got {bound}")
    counts = _representation_counts(bound)
    return [N for N in range(2, bound + 1, 2) if counts[N] == 1]


def unique_even_density(bound: int) -> Fraction:
    """Share of even numbers <= bound with exactly one representation."""
    return Fraction(len(unique_evens(bound)), bound // 2)


def theorem7_holds(bound: int) -> bool:
    """Every even N <= bound is a sum of two t-values."""
    counts = _representation_counts(bound)
    return all(counts[N] for N in range(2, bound + 1, 2))


def v_term(n: int, search_cap: int | None = None, policy: str = "value") -> int:
    """Least even N that cannot be written as a sum of two allowed t-terms.

    policy "value": the value t_n is forbidden, any other value may be used twice.
    policy "index": indices k, l must both differ from n; k == l is allowed.
    policy "index-distinct": as "index" with k != l as well.
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if policy not in V_POLICIES:
        raise DomainError(f"policy must be one of {V_POLICIES}, got {policy!r}")
    t_n = t_prefix(n)[-1]
    cap = max(200, 4 * t_n) if search_cap is None else search_cap
    terms = list(itertools.takewhile(lambda v: v <= cap, iter_t()))
    if policy == "value":
        allowed = sorted(set(terms) - {t_n})
        sums = {u + v for i, u in enumerate(allowed) for v in allowed[i:]}
    else:
        indexed = [(j, v) for j, v in enumerate(terms, start=1) if j != n]
        distinct = policy == "index-distinct"
        sums = {u + v for i, (_, u) in enumerate(indexed)
                for _, v in indexed[i + 1 if distinct else i:]}
    for N in range(2, cap + 1, 2):
        if N not in sums:
            return N
    raise CapExhausted(f"every even N <= {cap} is representable without t_{n}")
