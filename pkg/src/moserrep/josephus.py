"""Back-and-forth every-second elimination on a line, and its identities.

W(N) is the survivor of N persons standing on a line: walk from the left end,
skipping and removing alternately; at an end, turn around without visiting the
end person twice, and keep alternating.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .decompose import DecompositionPair
from .errors import DomainError, RangeError, checked
from .radix import valuation
from .sequences import SequenceFamily, counting, s_term

RIGHTWARD, LEFTWARD = "R", "L"


@dataclass
class JosephusLine:
    """Elimination state; persons are linked by index so removal is O(1)."""

    n: int
    direction: str = RIGHTWARD
    remove_next: bool = False
    trace: list[tuple[str, int]] = field(default_factory=list)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DomainError(f"need at least one person, got {self.n}")
        # slot 0 and n+1 are sentinels for the two ends
        self.right = list(range(1, self.n + 2)) + [0]
        self.left = [0] + list(range(self.n + 1))
        self.remaining = self.n
        self.current = 1

    def _step(self, person: int) -> int:
        return self.right[person] if self.direction == RIGHTWARD else self.left[person]

    def _unlink(self, person: int) -> None:
        lo, hi = self.left[person], self.right[person]
        self.right[lo] = hi
        self.left[hi] = lo
        self.remaining -= 1
        self.trace.append((self.direction, person))

    def advance(self) -> None:
        """Act on the current person, then move to the next one."""
        person = self.current
        if self.remove_next:
            self._unlink(person)
        self.remove_next = not self.remove_next
        nxt = self._step(person)
        if nxt in (0, self.n + 1):
            self.direction = LEFTWARD if self.direction == RIGHTWARD else RIGHTWARD
            nxt = self._step(person)
        self.current = nxt

    def run(self) -> int:
        while self.remaining > 1:
            self.advance()
        return self.right[0]


def simulate_survivor(N: int) -> int:
    """W(N) by running the elimination one sweep at a time.

    Each sweep keeps the persons at even offsets from where it starts. The next
    sweep starts from the far end: from the end person when it was skipped (it
    is not visited again), or from the person skipped just before it when it
    was removed. In both cases that start is skipped, so every sweep is the same
    even-offset selection on the reversed line.
    """
    if N < 1:
        raise DomainError(f"N must be >= 1, got {N}")
    line = np.arange(1, N + 1)
    while len(line) > 1:
        line = line[(len(line) - 1) & ~1::-2]
    return int(line[0])


def elimination_trace(N: int) -> list[tuple[str, int]]:
    """(direction, person) for every removal, in order."""
    line = JosephusLine(N)
    line.run()
    return line.trace


def survivor_closed(N: int) -> int:
    """W(N) from the odd-position bits of N (N odd) or N - 1 (N even)."""
    if N < 1:
        raise DomainError(f"N must be >= 1, got {N}")
    odd = N if N % 2 else N - 1
    return 1 + (odd & 0xAAAAAAAAAAAAAAAA)


def survivor_recurrence_check(m: int) -> tuple[bool, bool, bool]:
    """Pairwise equalities among W(2m), W(2m-1) and 2m+1-2W(m)."""
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    a, b = survivor_closed(2 * m), survivor_closed(2 * m - 1)
    c = 2 * m + 1 - 2 * survivor_closed(m)
    return a == b, b == c, a == c


def _s_index(value: int) -> int:
    """Index n with s_n = value, for value in the r = 2 s-set."""
    if value < 1 or value % 2 == 0 or (value - 1) & 0x5555555555555555:
        raise DomainError(f"{value} is not a term of the s-sequence")
    n_minus_1, bit, v = 0, 1, (value - 1) >> 1
    while v:
        if v & 1:
            n_minus_1 |= bit
        v >>= 2
        bit <<= 1
    return n_minus_1 + 1


def decomposition_via_w(N: int) -> DecompositionPair:
    """(k, l) with s_k = W(N-2) and s_l = W((N-1)/2)."""
    if N < 3 or N % 2 == 0:
        raise DomainError(f"N must be odd and >= 3, got {N}")
    k = _s_index(survivor_closed(N - 2))
    l = _s_index(survivor_closed((N - 1) // 2))
    return DecompositionPair(k, l, SequenceFamily("s", r=2))


def w_step_down(n: int) -> int:
    """W(s_n - 2), which must equal s_{n-1}."""
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n}")
    w = survivor_closed(s_term(n) - 2)
    if w != s_term(n - 1):
        raise AssertionError(f"W(s_{n} - 2) = {w} != s_{n - 1}")
    return w


def v_map(n: int) -> int:
    if n < 3:
        raise DomainError(f"V(n) = W(n - 2) needs n >= 3, got {n}")
    return survivor_closed(n - 2)


def v_iterate(N: int, max_steps: int | None = None) -> list[int]:
    """The orbit V(N), V(V(N)), ... up to and including the first value 1.

    The orbit steps down the s-sequence one index at a time, so it can never be
    longer than the number of s-terms below N; that is the default step cap.
    """
    orbit = [v_map(N)]
    if max_steps is None:
        max_steps = counting(N, 2)
    while orbit[-1] != 1:
        if len(orbit) >= max_steps:
            raise RangeError(f"V-orbit of {N} did not reach 1 in {max_steps} steps")
        if orbit[-1] < 3:
            raise AssertionError(f"V-orbit of {N} stalled at {orbit[-1]}")
        orbit.append(v_map(orbit[-1]))
    return orbit


def half_step_term(n: int) -> int:
    """(4^(t+1) + 2)/6 with t the 2-adic valuation of n - 1."""
    t = valuation(n - 1, 2)
    return checked((4 ** (t + 1) + 2) // 6)


def half_step_sum_check(n_max: int) -> bool:
    """Partial sums of W((s_n - 1)/2) over n = 2..N equal (s_N - 1)/2 for every N <= n_max,
    and each summand matches its closed form."""
    if n_max < 2:
        raise DomainError(f"n_max must be >= 2, got {n_max}")
    total = 0
    for n in range(2, n_max + 1):
        s = s_term(n)
        w = survivor_closed((s - 1) // 2)
        if w != half_step_term(n):
            return False
        total += w
        if total != (s - 1) // 2:
            return False
    return True
