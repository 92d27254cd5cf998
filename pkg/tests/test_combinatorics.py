from fractions import Fraction
from math import comb
from math import factorial

from hypothesis import given
from hypothesis import strategies as st
import pytest
from sympy.functions.combinatorial.numbers import stirling
from sympy.utilities.iterables import partitions

from moserpoly.combinatorics import binomial
from moserpoly.combinatorics import Composition
from moserpoly.combinatorics import compositions_of
from moserpoly.combinatorics import eulerian
from moserpoly.combinatorics import eulerian_recurrence
from moserpoly.combinatorics import eulerian_row
from moserpoly.combinatorics import falling_power
from moserpoly.combinatorics import format_rational
from moserpoly.combinatorics import knuth_eulerian
from moserpoly.combinatorics import multinomial_prefactor
from moserpoly.combinatorics import Partition
from moserpoly.combinatorics import partition_count
from moserpoly.combinatorics import partitions_of
from moserpoly.combinatorics import stirling1_row
from moserpoly.combinatorics import stirling1_unsigned
from moserpoly.combinatorics import stirling2
from moserpoly.combinatorics import to_rational
from moserpoly.combinatorics import triangle
from moserpoly.errors import InvalidArgumentError

EULERIAN_TRIANGLE = [
    (1, ),
    (1, 1),
    (1, 4, 1),
    (1, 11, 11, 1),
    (1, 26, 66, 26, 1),
    (1, 57, 302, 302, 57, 1),
    (1, 120, 1191, 2416, 1191, 120, 1),
    (1, 247, 4293, 15619, 15619, 4293, 247, 1),
]


@pytest.mark.parametrize("x, p, expected", [
    (5, 3, 60),
    (Fraction(7, 2), 0, 1),
    (3, 5, 0),
    (Fraction(1, 2), 2, Fraction(-1, 4)),
])
def test_falling_power(x, p, expected):
    assert falling_power(x, p) == expected


@pytest.mark.parametrize("x, j, expected", [
    (5, 2, 10),
    (4, -1, 0),
    (-1, 3, -1),
    (Fraction(1, 2), 2, Fraction(-1, 8)),
])
def test_binomial(x, j, expected):
    assert binomial(x, j) == expected


def test_partitions_order():
    assert partitions_of(1) == [Partition((1, ))]
    assert [p.parts for p in partitions_of(4)] == [
        (4, ),
        (3, 1),
        (2, 2),
        (2, 1, 1),
        (1, 1, 1, 1),
    ]
    assert len(partitions_of(5)) == 7


@pytest.mark.parametrize("k", range(1, 16))
def test_partitions_match_count(k):
    partitions = partitions_of(k)
    assert len(partitions) == partition_count(k)
    assert len(set(partitions)) == len(partitions)
    assert all(p.weight == k for p in partitions)


def test_partition_rejects_increasing_parts():
    with pytest.raises(InvalidArgumentError):
        Partition((1, 2))
    assert Partition.of(1, 3, 1).parts == (3, 1, 1)
    assert Partition.of(3, 1, 1).multiplicities == (1, 2)


def test_compositions():
    assert compositions_of(4, 2) == [
        Composition((1, 3)),
        Composition((2, 2)),
        Composition((3, 1)),
    ]
    assert compositions_of(3, 3) == [Composition((1, 1, 1))]
    assert compositions_of(2, 3) == []


@given(st.integers(1, 12), st.integers(1, 12))
def test_composition_count(t, d):
    assert len(compositions_of(t, d)) == comb(t - 1, d - 1)


@pytest.mark.parametrize("n, m, expected", [
    (4, 1, 11),
    (8, 3, 15619),
    (5, 5, 0),
    (0, 0, 1),
    (3, -1, 0),
])
def test_eulerian(n, m, expected):
    assert eulerian(n, m) == expected


def test_eulerian_triangle_rows():
    assert [eulerian_row(n) for n in range(1, 9)] == EULERIAN_TRIANGLE
    assert triangle("eulerian", 8) == EULERIAN_TRIANGLE


@pytest.mark.parametrize("n", range(0, 13))
def test_eulerian_formulas_agree(n):
    for m in range(-1, n + 1):
        assert eulerian(n, m) == eulerian_recurrence(n, m)
    for m in range(n):
        assert eulerian(n, m) == knuth_eulerian(n, m)
        assert eulerian(n, m) == eulerian(n, n - 1 - m)
    if n:
        assert sum(eulerian_row(n)) == factorial(n)


@pytest.mark.parametrize("i, j, expected", [
    (4, 2, 11),
    (0, 0, 1),
    (3, 0, 0),
    (5, 5, 1),
    (2, 3, 0),
])
def test_stirling1_unsigned(i, j, expected):
    assert stirling1_unsigned(i, j) == expected


@pytest.mark.parametrize("n, m, expected", [
    (4, 2, 7),
    (6, 6, 1),
    (3, 5, 0),
    (5, 0, 0),
    (0, 0, 1),
])
def test_stirling2(n, m, expected):
    assert stirling2(n, m) == expected


@pytest.mark.parametrize("n", range(0, 13))
def test_stirling_numbers_match_sympy(n):
    for m in range(0, n + 2):
        assert stirling2(n, m) == int(stirling(n, m))
        assert stirling1_unsigned(n, m) == int(
            stirling(n, m, kind=1, signed=False))
    assert stirling1_row(n) == tuple(
        int(stirling(n, m, kind=1, signed=False)) for m in range(n + 1))


@pytest.mark.parametrize("k", range(1, 13))
def test_partitions_match_sympy(k):
    # sympy reuses the yielded dict, read it before advancing
    expected = {
        tuple(sorted((part for part, times in p.items() for _ in range(times)),
                     reverse=True))
        for p in partitions(k)
    }
    assert {p.parts for p in partitions_of(k)} == expected
    assert partition_count(k) == len(expected)


def test_triangle_bounds():
    with pytest.raises(InvalidArgumentError):
        triangle("eulerian", 65)
    with pytest.raises(InvalidArgumentError):
        triangle("catalan", 3)
    assert triangle("stirling2", 5)[4] == (0, 1, 7, 6, 1)
    assert triangle("stirling1", 3) == [(1, ), (0, 1), (0, 1, 1), (0, 2, 3, 1)]


def test_multinomial_prefactor():
    # 4! / (2! 1! 1! * 1! 2!)
    assert multinomial_prefactor(Partition((2, 1, 1))) == 6
    assert multinomial_prefactor(Partition((3, ))) == 1


@pytest.mark.parametrize("text, expected", [
    ("7/2", Fraction(7, 2)),
    ("-3", Fraction(-3)),
    (5, Fraction(5)),
])
def test_to_rational(text, expected):
    assert to_rational(text) == expected


@pytest.mark.parametrize("bad", ["1/0", "abc", 0.5, True])
def test_to_rational_rejects(bad):
    with pytest.raises(InvalidArgumentError):
        to_rational(bad)


def test_format_rational():
    assert format_rational(Fraction(6, 3)) == "2"
    assert format_rational(Fraction(-3, 4)) == "-3/4"
