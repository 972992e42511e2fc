"""Term lists printed in the source article, replayed against the library."""

from __future__ import annotations

import math
from typing import Callable, NamedTuple

from . import collinearity, lattice, progressions, sequences

MOSER_DE_BRUIJN = [0, 1, 4, 5, 16, 17, 20, 21, 64, 65, 68, 69, 80, 81, 84, 85, 256, 257]
AFFINE_1_2 = [1, 5, 17, 21, 65, 81, 85, 257]
T_TERMS = [1, 1, 3, 5, 9, 11, 17, 21, 33, 35, 41, 43, 65, 69, 81, 85, 129, 131, 137, 139, 161, 163]
V_TERMS = [2, 2, 4, 8, 30, 16, 28, 24, 114, 40, 58, 48, 100, 72, 92, 88]
UNIQUE_EVENS = [2, 4, 8, 16, 24, 28, 30, 32, 40, 48, 56, 58, 60, 62, 64, 72, 80, 88, 92, 96, 100]
PSI_4M_MINUS_1 = [1, 2, 3, 4, 7, 8, 9, 10, 13, 14, 15, 16, 19, 20, 21, 22, 29, 30]
TSP_MIN = ((3, 5, 9, 7), 3.0)
TSP_MAX = ((7, 5, 3, 9), 1 + 2 * math.sqrt(2))


class Outcome(NamedTuple):
    name: str
    passed: bool
    detail: str


def _compare(name: str, expected, actual) -> Outcome:
    if expected == actual:
        return Outcome(name, True, f"{len(expected)} terms")
    missing = sorted(set(actual) - set(expected))
    extra = sorted(set(expected) - set(actual))
    if missing or extra:
        detail = f"computed but not printed {missing}; printed but not computed {extra}"
    else:
        detail = f"expected {expected}, got {actual}"
    return Outcome(name, False, detail)


def _moser() -> Outcome:
    return _compare("moser r=2 (18 terms)", MOSER_DE_BRUIJN, sequences.moser_prefix(18, 2))


def _affine() -> Outcome:
    actual = [sequences.affine_s(n, 1, 2) for n in range(1, 9)]
    return _compare("s(1,2) (8 terms)", AFFINE_1_2, actual)


def _t() -> Outcome:
    return _compare("t (22 terms)", T_TERMS, sequences.t_prefix(22))


def _v() -> Outcome:
    return _compare("v (16 terms)", V_TERMS, [progressions.v_term(n) for n in range(1, 17)])


def _unique() -> Outcome:
    return _compare("unique evens <= 100", UNIQUE_EVENS, progressions.unique_evens(100))


def _psi() -> Outcome:
    table = collinearity.psi_range(4 * 18 - 1)
    return _compare("psi(4m-1) (18 terms)", PSI_4M_MINUS_1, [table[4 * m - 1] for m in range(1, 19)])


def _tsp() -> Outcome:
    lo, hi = lattice.path_tsp(2, 1, "min"), lattice.path_tsp(2, 1, "max")
    ok = (lo.permutation == TSP_MIN[0]
          and abs(lo.length - TSP_MIN[1]) <= lo.tolerance
          and abs(lattice.path_length(TSP_MIN[0], 2, 1) - lo.length) <= lo.tolerance
          and abs(hi.length - TSP_MAX[1]) <= hi.tolerance
          and abs(lattice.path_length(TSP_MAX[0], 2, 1) - hi.length) <= hi.tolerance)
    detail = f"min {lo.permutation} {lo.length:.12f}; max {hi.permutation} {hi.length:.12f}"
    return Outcome("lattice path r=2 t=1", ok, detail)


CHECKS: list[Callable[[], Outcome]] = [_moser, _affine, _t, _v, _unique, _psi, _tsp]


def run_fixtures() -> list[Outcome]:
    return [check() for check in CHECKS]
