import pytest
from hypothesis import given, strategies as st

from moserrep.decompose import decompose_s
from moserrep.errors import DomainError, RangeError
from moserrep.josephus import (JosephusLine, decomposition_via_w, elimination_trace,
                               half_step_sum_check, half_step_term, simulate_survivor,
                               survivor_closed, survivor_recurrence_check, v_iterate, w_step_down)
from moserrep.sequences import s_prefix, s_term
from oracles import josephus_by_pop

S_SET = set(s_prefix(20000, 2))


@pytest.mark.parametrize("N, W", [(1, 1), (3, 3), (5, 1), (6, 1)])
def test_survivor_examples(N, W):
    assert simulate_survivor(N) == W
    assert survivor_closed(N) == W
    assert josephus_by_pop(N) == W


def test_trace_for_five():
    assert elimination_trace(5) == [("R", 2), ("R", 4), ("L", 3), ("R", 5)]


def test_simulations_agree():
    for N in range(1, 1500):
        expected = josephus_by_pop(N)
        assert simulate_survivor(N) == expected
        assert JosephusLine(N).run() == expected
        assert survivor_closed(N) == expected


def test_simulation_matches_closed_form_sweep():
    assert all(simulate_survivor(N) == survivor_closed(N) for N in range(1, 2**14 + 1))


def test_trace_removes_everyone_but_survivor():
    for N in range(1, 200):
        removed = [p for _, p in elimination_trace(N)]
        assert sorted(removed + [simulate_survivor(N)]) == list(range(1, N + 1))


def test_recurrence():
    assert survivor_recurrence_check(3) == (True, True, True)
    assert survivor_recurrence_check(1) == (True, True, True)
    assert all(all(survivor_recurrence_check(m)) for m in range(1, 2**13 + 1))


def test_w_image_is_s_set():
    assert all(survivor_closed(N) in S_SET for N in range(1, 2**14 + 1))


def test_decomposition_via_w():
    assert tuple(decomposition_via_w(3)) == (1, 1)
    assert tuple(decomposition_via_w(27)) == (3, 3)
    assert tuple(decomposition_via_w(11)) == (3, 1)
    for N in range(3, 10**4 + 1, 2):
        assert N == survivor_closed(N - 2) + 2 * survivor_closed((N - 1) // 2)
        assert tuple(decomposition_via_w(N)) == tuple(decompose_s(N, 2))
    with pytest.raises(DomainError):
        decomposition_via_w(10)


def test_w_step_down():
    assert w_step_down(2) == 1
    assert w_step_down(3) == 3
    assert w_step_down(5) == 11
    for n in range(2, 10**4 + 1):
        w_step_down(n)


def test_v_iterate():
    assert v_iterate(3) == [1]
    assert v_iterate(11) == [9, 3, 1]
    orbit = v_iterate(35)
    assert orbit[-1] == 1
    assert all(a > b for a, b in zip(orbit[1:], orbit[2:]))


def test_v_iterate_walks_down_s():
    index = {s: n for n, s in enumerate(s_prefix(20000, 2), start=1)}
    for N in range(3, 10**4 + 1):
        orbit = v_iterate(N)
        assert orbit[-1] == 1
        idx = [index[v] for v in orbit]
        assert idx == list(range(idx[0], 0, -1))


def test_half_step():
    assert half_step_sum_check(2)
    assert half_step_sum_check(3)
    assert survivor_closed(1) + survivor_closed(4) == (s_term(3) - 1) // 2
    assert half_step_sum_check(1000)
    assert [half_step_term(n) for n in range(2, 7)] == [1, 3, 1, 11, 1]


@given(st.integers(1, 2**40))
def test_closed_form_even_odd(m):
    assert survivor_closed(2 * m) == survivor_closed(2 * m - 1) == 2 * m + 1 - 2 * survivor_closed(m)


def test_step_cap():
    with pytest.raises(RangeError):
        v_iterate(8195, max_steps=64)
    assert len(v_iterate(8195)) > 64


def test_domain():
    with pytest.raises(DomainError):
        simulate_survivor(0)
    with pytest.raises(DomainError):
        v_iterate(2)
