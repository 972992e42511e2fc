"""Coordinates of N = 1 (mod r) as points of a square grid, and exhaustive
Hamiltonian-path search over that grid."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .decompose import decompose_s
from .errors import DomainError, checked
from .sequences import s_term

TSP_LIMIT = 10
TOLERANCE = 1e-9


@dataclass(frozen=True, order=True)
class LatticePoint:
    k: int
    l: int


def interval(r: int, t: int) -> range:
    """The numbers N = 1 (mod r) with r + 1 <= N <= r^(2t+1) + 1."""
    if t < 0:
        raise DomainError(f"t must be >= 0, got {t}")
    return range(r + 1, checked(r ** (2 * t + 1) + 1) + 1, r)


def to_lattice(N: int, r: int, t: int) -> LatticePoint:
    if N not in interval(r, t):
        raise DomainError(f"{N} is not in the interval for r={r}, t={t}")
    k, l = decompose_s(N, r)
    return LatticePoint(k, l)


def from_lattice(p: LatticePoint, r: int) -> int:
    if p.k < 1 or p.l < 1:
        raise DomainError(f"coordinates must be positive, got {p}")
    return checked(s_term(p.k, r) + r * s_term(p.l, r))


def path_length(labels, r: int, t: int) -> float:
    """Euclidean length of the open path visiting the grid points of `labels` in order."""
    points = [to_lattice(N, r, t) for N in labels]
    return sum(math.hypot(p.k - q.k, p.l - q.l) for p, q in zip(points, points[1:]))


@dataclass(frozen=True)
class TspResult:
    permutation: tuple[int, ...]
    length: float
    tolerance: float = TOLERANCE


def path_tsp(r: int, t: int, objective: str = "min") -> TspResult:
    """Shortest or longest open path through every grid point, by enumeration.

    Ties within TOLERANCE go to the lexicographically least sequence of N-values.
    """
    if objective not in ("min", "max"):
        raise DomainError(f"objective must be 'min' or 'max', got {objective!r}")
    labels = list(interval(r, t))
    if len(labels) > TSP_LIMIT:
        raise DomainError(f"{len(labels)} points is too many for exhaustive search (limit {TSP_LIMIT})")
    points = [to_lattice(N, r, t) for N in labels]
    size = len(labels)
    dist = [[math.hypot(p.k - q.k, p.l - q.l) for q in points] for p in points]
    sign = 1.0 if objective == "min" else -1.0

    best, best_score = tuple(range(size)), math.inf
    # permutations() yields lexicographic order, so a later candidate only wins
    # by a clear margin; a path and its reverse tie, and the lesser one has first < last
    for perm in itertools.permutations(range(size)):
        if size > 1 and perm[0] > perm[-1]:
            continue
        score = sign * sum(dist[a][b] for a, b in zip(perm, perm[1:]))
        if score < best_score - TOLERANCE:
            best, best_score = perm, score
    return TspResult(tuple(labels[i] for i in best), sign * best_score if size > 1 else 0.0)
