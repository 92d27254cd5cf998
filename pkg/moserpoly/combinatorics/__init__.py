"""Exact combinatorial primitives.

Binomials with rational upper argument, falling powers, partition and
composition enumeration, Eulerian and Stirling numbers. Every integer is a
Python ``int`` and every scalar a ``Fraction``, so nothing overflows.

Enumeration orders are part of the contract:

- ``partitions_of`` yields partitions in reverse-lexicographic order on
  their parts, e.g. ``{4}, {3,1}, {2,2}, {2,1,1}, {1,1,1,1}``;
- ``compositions_of`` yields compositions in lexicographic order.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from itertools import groupby
import logging
from math import comb
from math import factorial
from math import prod
from typing import List, Tuple, Union

from moserpoly.errors import IntegralityError
from moserpoly.errors import InvalidArgumentError

ExactRational = Fraction
RationalLike = Union[int, Fraction]


@dataclass(frozen=True, order=True)
class Partition:
    """Non-increasing sequence of positive integers."""

    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise InvalidArgumentError("A partition needs at least one part")
        if any(p < 1 for p in parts):
            raise InvalidArgumentError(f"Partition parts must be >= 1: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise InvalidArgumentError(
                f"Partition parts must be non-increasing: {parts}")

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        """Build a partition from parts in any order."""
        return cls(tuple(sorted(parts, reverse=True)))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def multiplicities(self) -> Tuple[int, ...]:
        """Run lengths of equal parts, largest part first."""
        return tuple(len(list(run)) for _, run in groupby(self.parts))

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __str__(self):
        return "{" + ",".join(map(str, self.parts)) + "}"


@dataclass(frozen=True, order=True)
class Composition:
    """Ordered sequence of positive integers."""

    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts or any(p < 1 for p in parts):
            raise InvalidArgumentError(
                f"Composition parts must be positive: {parts}")

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)


def to_rational(x: RationalLike) -> Fraction:
    """Coerce ints, Fractions and ``"num/den"`` strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool) or isinstance(x, float):
        raise InvalidArgumentError(f"Refusing inexact scalar {x!r}")
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError, TypeError) as e:
        raise InvalidArgumentError(f"Invalid rational literal {x!r}: {e}")


def format_rational(x: Fraction) -> str:
    """Render as a bare integer or ``num/den``."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def falling_power(x: RationalLike, p: int) -> Fraction:
    """x(x-1)...(x-p+1); the empty product for p = 0."""
    if p < 0:
        raise InvalidArgumentError(f"Falling power needs p >= 0, got {p}")
    x = to_rational(x)
    return prod((x - m for m in range(p)), start=Fraction(1))


def binomial(x: RationalLike, j: int) -> Fraction:
    """C(x, j) for rational x; zero for negative j."""
    if j < 0:
        return Fraction(0)
    x = to_rational(x)
    if x.denominator == 1 and x >= 0:
        return Fraction(comb(x.numerator, j))
    return falling_power(x, j) / factorial(j)


def partitions_of(k: int) -> List[Partition]:
    """All partitions of k in reverse-lexicographic order."""
    if k < 1:
        raise InvalidArgumentError(f"partitions_of needs k >= 1, got {k}")

    result = []
    parts = [k]
    while True:
        result.append(Partition(tuple(parts)))

        # Strip trailing ones, then lower the last part that can be lowered
        ones = 0
        while parts and parts[-1] == 1:
            parts.pop()
            ones += 1
        if not parts:
            break

        largest = parts.pop() - 1
        remaining = ones + 1
        parts.append(largest)
        while remaining > largest:
            parts.append(largest)
            remaining -= largest
        if remaining:
            parts.append(remaining)

    return result


def compositions_of(t: int, d: int) -> List[Composition]:
    """All length-d compositions of t in lexicographic order."""
    if t < 1 or d < 1:
        raise InvalidArgumentError(
            f"compositions_of needs t >= 1 and d >= 1, got t={t}, d={d}")

    result = []
    # Cut points 0 < c_1 < ... < c_{d-1} < t, enumerated lexicographically
    for cuts in combinations(range(1, t), d - 1):
        bounds = (0, ) + cuts + (t, )
        result.append(
            Composition(tuple(b - a for a, b in zip(bounds, bounds[1:]))))
    return result


@lru_cache(maxsize=None)
def partition_count(k: int) -> int:
    """Number of partitions of k by dynamic programming over part sizes."""
    if k < 0:
        return 0
    ways = [1] + [0] * k
    for part in range(1, k + 1):
        for total in range(part, k + 1):
            ways[total] += ways[total - part]
    return ways[k]


def multinomial_prefactor(partition: Partition) -> int:
    """k! / (l_1!...l_d! * delta_1!...delta_q!), the number of set dissections."""
    numerator = factorial(partition.weight)
    denominator = prod(factorial(p) for p in partition.parts)
    denominator *= prod(factorial(m) for m in partition.multiplicities)
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise IntegralityError(
            f"Multinomial prefactor of {partition} is not integral")
    return quotient


def eulerian(n: int, m: int) -> int:
    """Eulerian number <n, m> by the explicit alternating sum.

    Zero for m < 0 or m >= n, except <0, 0> = 1.
    """
    if m < 0 or n < 0:
        return 0
    if n == 0:
        return 1 if m == 0 else 0
    if m >= n:
        return 0
    return sum((-1)**j * comb(n + 1, j) * (m + 1 - j)**n
               for j in range(m + 1))


@lru_cache(maxsize=None)
def eulerian_recurrence(n: int, m: int) -> int:
    """Eulerian number from <n,m> = (m+1)<n-1,m> + (n-m)<n-1,m-1>."""
    if m < 0 or n < 0:
        return 0
    if n == 0:
        return 1 if m == 0 else 0
    if m >= n:
        return 0
    return ((m + 1) * eulerian_recurrence(n - 1, m) +
            (n - m) * eulerian_recurrence(n - 1, m - 1))


def eulerian_row(n: int) -> Tuple[int, ...]:
    """Row n of the Eulerian triangle, <n,0> .. <n,n-1> (just (1,) for n = 0)."""
    if n == 0:
        return (1, )
    return tuple(eulerian(n, m) for m in range(n))


@lru_cache(maxsize=None)
def stirling1_row(i: int) -> Tuple[int, ...]:
    """Unsigned Stirling numbers of the first kind c(i, 0..i)."""
    if i < 0:
        raise InvalidArgumentError(f"Stirling row index must be >= 0, got {i}")
    if i == 0:
        return (1, )
    prev = stirling1_row(i - 1)
    row = [0] * (i + 1)
    for j in range(1, i + 1):
        row[j] = prev[j - 1] + ((i - 1) * prev[j] if j < i else 0)
    return tuple(row)


def stirling1_unsigned(i: int, j: int) -> int:
    """Unsigned Stirling number of the first kind c(i, j)."""
    if i < 0 or j < 0 or j > i:
        return 0
    return stirling1_row(i)[j]


def stirling2(n: int, m: int) -> int:
    """Stirling number of the second kind S(n, m) by the explicit formula."""
    if n < 0 or m < 0:
        return 0
    total = sum((-1)**(m - j) * comb(m, j) * j**n for j in range(m + 1))
    quotient, remainder = divmod(total, factorial(m))
    if remainder:
        raise IntegralityError(f"S({n},{m}) sum not divisible by {m}!")
    return quotient


def knuth_eulerian(n: int, k: int) -> int:
    """Eulerian number through second-kind Stirling numbers.

    <n,k> = sum_{i=k}^{n-1} (-1)^{i-k} C(i,k) (n-i)! S(n, n-i)
    """
    return sum((-1)**(i - k) * comb(i, k) * factorial(n - i) *
               stirling2(n, n - i) for i in range(k, n))


def triangle(kind: str, rows: int) -> List[Tuple[int, ...]]:
    """Rows 0..rows of a named triangle (rows 1..rows for ``eulerian``)."""
    if rows < 0 or rows > 64:
        raise InvalidArgumentError(f"Row count must be in [0, 64], got {rows}")

    logging.debug(f"Building {kind} triangle with {rows} rows")
    if kind == "eulerian":
        return [eulerian_row(n) for n in range(1, rows + 1)]
    if kind == "stirling1":
        return [stirling1_row(i) for i in range(rows + 1)]
    if kind == "stirling2":
        return [
            tuple(stirling2(n, m) for m in range(n + 1))
            for n in range(rows + 1)
        ]
    raise InvalidArgumentError(f"Unknown triangle kind: {kind}")
