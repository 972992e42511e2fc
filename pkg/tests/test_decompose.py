import pytest
from hypothesis import given, strategies as st

from moserrep.decompose import decompose_moser, decompose_s, decompose_shifted, oracle_decompose
from moserrep.errors import DomainError
from moserrep.sequences import SequenceFamily, moser, s_prefix, shifted_a
from oracles import all_pairs, greedy_moser

MOSER2 = SequenceFamily("moser", r=2)


def test_example_1():
    pair = decompose_moser(27, 2)
    assert tuple(pair) == (5, 3)
    assert pair.terms() == (17, 5)
    assert pair.recombine() == 27


def test_decompose_moser_examples():
    assert tuple(decompose_moser(0, 5)) == (0, 0)
    m3 = greedy_moser(10, 3)
    assert all_pairs(10, m3, 3) == [(4, 0)]
    assert tuple(decompose_moser(10, 3)) == (4, 0)


def test_decompose_s_examples():
    s2 = s_prefix(10, 2)
    assert all_pairs(27, s2, 2, 1) == [(3, 3)]
    assert tuple(decompose_s(27, 2)) == (3, 3)
    assert tuple(decompose_s(3, 2)) == (1, 1)
    assert all_pairs(10, s_prefix(5, 3), 3, 1) == [(3, 1)]
    assert tuple(decompose_s(10, 3)) == (3, 1)


@pytest.mark.parametrize("N, r", [(8, 2), (2, 2), (11, 3), (3, 3), (1, 2)])
def test_decompose_s_domain(N, r):
    with pytest.raises(DomainError):
        decompose_s(N, r)


def test_decompose_shifted_examples():
    values = [shifted_a(n, 3) for n in range(6)]
    assert all_pairs(19, values, 2) == [(3, 0)]
    assert tuple(decompose_shifted(19, 3)) == (3, 0)
    assert tuple(decompose_shifted(9, 3)) == (0, 0)
    assert tuple(decompose_shifted(15, 5)) == (0, 0)
    for bad in (8, 7, 20):
        with pytest.raises(DomainError):
            decompose_shifted(bad, 3)


def test_oracle_examples():
    assert [tuple(p) for p in oracle_decompose(27, MOSER2)] == [(5, 3)]
    assert [tuple(p) for p in oracle_decompose(2, MOSER2)] == [(0, 1)]
    assert [tuple(p) for p in oracle_decompose(4, SequenceFamily("s", r=3))] == [(1, 1)]
    assert oracle_decompose(5, SequenceFamily("s", r=2)) != []
    assert oracle_decompose(4, SequenceFamily("s", r=2)) == []


def test_oracle_matches_double_loop():
    values = MOSER2.values_upto(300)
    for n in range(301):
        assert [tuple(p) for p in oracle_decompose(n, MOSER2)] == all_pairs(n, values, 2)


@pytest.mark.parametrize("r", [2, 3, 4, 5])
def test_moser_uniqueness_sweep(r):
    family = SequenceFamily("moser", r=r)
    for n in range(10**4 + 1):
        found = oracle_decompose(n, family)
        assert [tuple(p) for p in found] == [tuple(decompose_moser(n, r))]


@pytest.mark.parametrize("r", [2, 3, 4, 5])
def test_s_uniqueness_sweep(r):
    family = SequenceFamily("s", r=r)
    for N in range(r + 1, 10**4 + 1, r):
        found = oracle_decompose(N, family)
        assert [tuple(p) for p in found] == [tuple(decompose_s(N, r))]


@pytest.mark.parametrize("c", [3, 5, 7])
def test_shifted_uniqueness_sweep(c):
    family = SequenceFamily("shifted", c=c)
    for N in range(3 * c, 10**4 + 1, 2):
        pair = decompose_shifted(N, c)
        assert pair.recombine() == N
        assert [tuple(p) for p in oracle_decompose(N, family)] == [tuple(pair)]


@given(st.integers(0, 2**40), st.integers(2, 9))
def test_moser_round_trip(n, r):
    k, l = decompose_moser(n, r)
    assert moser(k, r) + r * moser(l, r) == n


@given(st.integers(0, 2**40), st.integers(2, 9))
def test_s_round_trip(j, r):
    N = r + 1 + r * j
    pair = decompose_s(N, r)
    assert pair.k >= 1 and pair.l >= 1
    assert pair.recombine() == N
