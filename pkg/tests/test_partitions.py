from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from primcob.partitions import (PartitionQuery, SizeLimitError, count_bounded_partitions,
                                enumerate_bounded_partitions)
from oracles import partitions_by_sympy


@pytest.mark.parametrize("m, t, expected", [
    (0, 5, 1),
    (-1, 3, 0),
    (4, 2, 3),
    (5, 0, 0),
])
def test_count_examples(m, t, expected):
    assert count_bounded_partitions(PartitionQuery(m, t)) == expected


def test_count_accepts_plain_arguments():
    assert count_bounded_partitions(4, 2) == 3


@pytest.mark.parametrize("m", [Fraction(1, 4), Fraction(-3, 4), Fraction(7, 2)])
def test_non_integral_m_has_no_partitions(m):
    assert count_bounded_partitions(m, 10) == 0


def test_rational_integral_m_counts():
    assert count_bounded_partitions(Fraction(8, 4), 2) == 2


def test_enumeration_examples():
    assert enumerate_bounded_partitions(4, 2) == [[2, 2], [2, 1, 1], [1, 1, 1, 1]]
    assert enumerate_bounded_partitions(0, 3) == [[]]
    assert enumerate_bounded_partitions(3, 1) == [[1, 1, 1]]


def test_enumeration_guard():
    with pytest.raises(SizeLimitError):
        enumerate_bounded_partitions(61, 2)


def test_dp_limit():
    with pytest.raises(SizeLimitError):
        count_bounded_partitions(20_001, 3)


def test_negative_t_rejected():
    with pytest.raises(ValueError):
        PartitionQuery(3, -1)


@given(st.integers(0, 30), st.integers(0, 10))
def test_enumeration_is_duplicate_free_and_well_formed(m, t):
    parts = enumerate_bounded_partitions(m, t)
    assert len({tuple(p) for p in parts}) == len(parts)
    for p in parts:
        assert sum(p) == m
        assert all(1 <= a <= t for a in p)
        assert p == sorted(p, reverse=True)


@given(st.integers(0, 60), st.integers(0, 15))
def test_matches_sympy_partitions(m, t):
    assert count_bounded_partitions(m, t) == partitions_by_sympy(m, t)


@given(st.integers(1, 200), st.integers(1, 20))
def test_recurrence(m, t):
    if m >= t:
        assert count_bounded_partitions(m, t) == (count_bounded_partitions(m, t - 1)
                                                  + count_bounded_partitions(m - t, t))


@given(st.integers(0, 200), st.integers(0, 20))
def test_monotone_in_t(m, t):
    assert count_bounded_partitions(m, t) <= count_bounded_partitions(m, t + 1)


def test_large_m_known_value():
    # unrestricted p(100), with t >= m
    assert count_bounded_partitions(100, 100) == 190569292
