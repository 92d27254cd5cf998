"""Truncated bivariate series oracle for the s-sum generating function.

Two tables are built for an n-multiset A, indexed by (j, m):

- ``series_lhs``: L[j][m] = p_j(A^(m)) / j!, straight from s-sum enumeration
  (L[0][0] = 1, L[j][0] = 0 for j > 0, p_0(A^(m)) = C(n, m));
- ``series_rhs``: the coefficients of
  (1 + y)^n * exp( sum_{j,m>=1} (-1)^(m-1) (p_j(A)/j!) m^(j-1) x^j y^m ).

The two tables must agree entrywise.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from math import factorial
from typing import List, Tuple

from moserpoly.errors import InvalidArgumentError
from moserpoly.symfun.multiset import NumberMultiset
from moserpoly.symfun.multiset import power_sums
from moserpoly.symfun.multiset import s_sums

MAX_TRUNCATION = 12


@dataclass(frozen=True)
class SeriesTable:
    max_j: int
    max_m: int
    coefficients: Tuple[Tuple[Fraction, ...], ...]

    def entry(self, j: int, m: int) -> Fraction:
        return self.coefficients[j][m]


class TruncatedSeries:
    """Dense bivariate series in x, y cut off above degree (max_j, max_m)."""

    def __init__(self, max_j: int, max_m: int, grid=None):
        self.max_j = max_j
        self.max_m = max_m
        self.grid = grid or [[Fraction(0)] * (max_m + 1)
                             for _ in range(max_j + 1)]

    @classmethod
    def one(cls, max_j: int, max_m: int) -> "TruncatedSeries":
        series = cls(max_j, max_m)
        series.grid[0][0] = Fraction(1)
        return series

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return TruncatedSeries(
            self.max_j, self.max_m,
            [[a + b for a, b in zip(row, other_row)]
             for row, other_row in zip(self.grid, other.grid)])

    def scale(self, factor: Fraction) -> "TruncatedSeries":
        return TruncatedSeries(self.max_j, self.max_m,
                               [[a * factor for a in row]
                                for row in self.grid])

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        result = TruncatedSeries(self.max_j, self.max_m)
        for j1, row in enumerate(self.grid):
            for m1, a in enumerate(row):
                if a == 0:
                    continue
                for j2 in range(self.max_j - j1 + 1):
                    other_row = other.grid[j2]
                    target = result.grid[j1 + j2]
                    for m2 in range(self.max_m - m1 + 1):
                        b = other_row[m2]
                        if b:
                            target[m1 + m2] += a * b
        return result

    def exp(self) -> "TruncatedSeries":
        """exp of a series whose terms all carry x^1 or higher.

        1 + T/1! + T^2/2! + ...; T^r starts at x^r so the sum stops at max_j.
        """
        if any(self.grid[0]):
            raise InvalidArgumentError(
                "exp needs a series without pure-y terms")
        result = TruncatedSeries.one(self.max_j, self.max_m)
        power = TruncatedSeries.one(self.max_j, self.max_m)
        for r in range(1, self.max_j + 1):
            power = power * self
            result = result + power.scale(Fraction(1, factorial(r)))
        return result

    def freeze(self) -> SeriesTable:
        return SeriesTable(self.max_j, self.max_m,
                           tuple(tuple(row) for row in self.grid))


def _check_bounds(max_j: int, max_m: int):
    if not (0 <= max_j <= MAX_TRUNCATION and 0 <= max_m <= MAX_TRUNCATION):
        raise InvalidArgumentError(
            f"Truncation bounds ({max_j}, {max_m}) exceed {MAX_TRUNCATION}")


def series_lhs(A: NumberMultiset, max_j: int, max_m: int) -> SeriesTable:
    _check_bounds(max_j, max_m)
    n = A.size
    series = TruncatedSeries(max_j, max_m)
    series.grid[0][0] = Fraction(1)

    for m in range(1, min(max_m, n) + 1):
        sums = s_sums(A, m)
        series.grid[0][m] = Fraction(comb(n, m))
        if max_j:
            for j, value in enumerate(power_sums(sums, max_j).values,
                                      start=1):
                series.grid[j][m] = value / factorial(j)

    return series.freeze()


def series_rhs(A: NumberMultiset, max_j: int, max_m: int) -> SeriesTable:
    _check_bounds(max_j, max_m)
    n = A.size

    argument = TruncatedSeries(max_j, max_m)
    if max_j:
        scaled: List[Fraction] = [
            p / factorial(j)
            for j, p in enumerate(power_sums(A, max_j).values, start=1)
        ]
        for j in range(1, max_j + 1):
            for m in range(1, max_m + 1):
                argument.grid[j][m] = ((-1)**(m - 1) * scaled[j - 1] *
                                       m**(j - 1))

    binomial_row = TruncatedSeries(max_j, max_m)
    for m in range(max_m + 1):
        binomial_row.grid[0][m] = Fraction(comb(n, m))

    return (binomial_row * argument.exp()).freeze()
