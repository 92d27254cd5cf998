"""Moser polynomials and the power-sum expansion of s-sum multisets.

For an n-multiset A, p_k(A^(s)) is an integer polynomial in p_1(A)..p_k(A):

    p_k(A^(s)) = sum over partitions lam of k of c_lam * p_lam(A)

``q_polynomial`` returns that expansion for concrete (s, k, n). The
coefficient of the single-part partition {k} is the Moser polynomial

    F_{s,k}(x) = sum_{j=1}^{s} (-1)^(j-1) j^(k-1) C(x, s-j)

evaluated at x = n. The alternative closed forms of F_{s,k} live here too,
and ``moserpoly.moser.identities`` checks the identities they satisfy.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from math import prod
from typing import Dict, Iterator, List, Tuple

from moserpoly.combinatorics import binomial
from moserpoly.combinatorics import compositions_of
from moserpoly.combinatorics import eulerian
from moserpoly.combinatorics import eulerian_row
from moserpoly.combinatorics import Partition
from moserpoly.combinatorics import partitions_of
from moserpoly.combinatorics import RationalLike
from moserpoly.combinatorics import stirling2
from moserpoly.combinatorics import to_rational
from moserpoly.errors import IntegralityError
from moserpoly.errors import InvalidArgumentError
from moserpoly.polynomials import Basis
from moserpoly.polynomials import convert_basis
from moserpoly.polynomials import DensePolynomial


@dataclass(frozen=True)
class QPolynomial:
    """Q_{s,k,n} as (partition, c_lam) pairs in ``partitions_of`` order.

    Only nonzero coefficients are stored.
    """

    s: int
    k: int
    n: int
    terms: Tuple[Tuple[Partition, int], ...]

    def __post_init__(self):
        for partition, coefficient in self.terms:
            if partition.weight != self.k:
                raise InvalidArgumentError(
                    f"Partition {partition} does not have weight {self.k}")
            if coefficient == 0:
                raise InvalidArgumentError(
                    f"Zero coefficient stored for {partition}")

    def __iter__(self) -> Iterator[Tuple[Partition, int]]:
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)

    def as_dict(self) -> Dict[Partition, int]:
        return dict(self.terms)

    def coefficient(self, partition: Partition) -> int:
        return self.as_dict().get(partition, 0)

    @property
    def top_coefficient(self) -> int:
        """c_{k}, which equals M_{s,k,n} = F_{s,k}(n)."""
        return self.coefficient(Partition((self.k, )))

    @property
    def tilde(self) -> "QPolynomial":
        """Q without its {k} term, a polynomial in p_1..p_{k-1}."""
        top = Partition((self.k, ))
        return QPolynomial(self.s, self.k, self.n,
                           tuple(t for t in self.terms if t[0] != top))

    def to_dict(self) -> dict:
        return {
            "s": self.s,
            "k": self.k,
            "n": self.n,
            "terms": [{
                "partition": list(partition.parts),
                "coeff": str(coefficient)
            } for partition, coefficient in self.terms],
        }


@dataclass(frozen=True)
class MoserPolynomial:
    """F_{s,k}(x) in the monomial basis; degree s - 1."""

    s: int
    k: int
    coefficients: DensePolynomial

    def eval(self, x: RationalLike) -> Fraction:
        return self.coefficients.eval(x)

    def normalized(self) -> DensePolynomial:
        """(s-1)! F_{s,k}(x), which has integer coefficients."""
        scaled = self.coefficients * factorial(self.s - 1)
        if any(c.denominator != 1 for c in scaled.coefficients):
            raise IntegralityError(
                f"(s-1)! F_({self.s},{self.k}) has a non-integer coefficient")
        return scaled

    def falling_coefficients(self) -> DensePolynomial:
        return convert_basis(self.coefficients, Basis.FALLING)

    def __str__(self):
        return str(self.coefficients)


def _check_indices(s: int, k: int):
    if s < 1 or k < 1:
        raise InvalidArgumentError(f"Needs s >= 1 and k >= 1, got s={s}, k={k}")


def moser_value(s: int, k: int, x: RationalLike) -> Fraction:
    """F_{s,k}(x) from its defining binomial sum; F_{0,k} is the empty sum."""
    if s < 0 or k < 1:
        raise InvalidArgumentError(f"Needs s >= 0 and k >= 1, got s={s}, k={k}")
    x = to_rational(x)
    return sum(((-1)**(j - 1) * j**(k - 1) * binomial(x, s - j)
                for j in range(1, s + 1)), Fraction(0))


def moser_coefficients(s: int, k: int) -> MoserPolynomial:
    """Monomial coefficients of F_{s,k}.

    C(x, s-j) = x^[s-j] / (s-j)!, so F_{s,k} is read off in the falling basis
    and moved to monomials with Stirling numbers of the first kind.
    """
    _check_indices(s, k)
    falling = [Fraction(0)] * s
    for j in range(1, s + 1):
        falling[s - j] = Fraction((-1)**(j - 1) * j**(k - 1), factorial(s - j))
    monomial = convert_basis(DensePolynomial.falling(falling), Basis.MONOMIAL)
    return MoserPolynomial(s, k, monomial)


def _check_expansion_indices(s: int, k: int, n: int):
    _check_indices(s, k)
    if n < 1:
        raise InvalidArgumentError(f"Needs n >= 1, got n={n}")
    if k > n:
        raise InvalidArgumentError(f"Needs k <= n, got k={k}, n={n}")
    if s > n:
        raise InvalidArgumentError(f"Needs s <= n, got s={s}, n={n}")


def _prefactor_denominator(lam: Partition) -> int:
    return (prod(factorial(p) for p in lam.parts) *
            prod(factorial(m) for m in lam.multiplicities))


def _composition_weight(composition, lam: Partition) -> int:
    return prod(m**(part - 1) for m, part in zip(composition, lam.parts))


def _exact_divide(numerator: int, lam: Partition) -> int:
    quotient, remainder = divmod(numerator, _prefactor_denominator(lam))
    if remainder:
        raise IntegralityError(
            f"c_lambda numerator {numerator} is not divisible for {lam}")
    return quotient


def _check_partition(k: int, lam: Partition):
    if lam.weight != k:
        raise InvalidArgumentError(
            f"Partition {lam} has weight {lam.weight}, expected {k}")


def c_lambda(s: int, k: int, n: int, lam: Partition) -> int:
    """Coefficient of p_lam(A) in p_k(A^(s)).

    sum_{p>=0} sum over length-d compositions M of s - p of
    (-1)^p C(n, p) prod m_i^(lam_i - 1), times (-1)^(s+d) k!, divided last
    by lam_1!...lam_d! delta_1!...delta_q!.
    """
    _check_expansion_indices(s, k, n)
    _check_partition(k, lam)
    d = lam.length
    if d > s:
        return 0

    total = 0
    for p in range(0, s - d + 1):
        inner = sum(
            _composition_weight(composition, lam)
            for composition in compositions_of(s - p, d))
        total += (-1)**p * int(binomial(n, p)) * inner
    return _exact_divide((-1)**(s + d) * factorial(k) * total, lam)


def c_lambda_alt(s: int, k: int, n: int, lam: Partition) -> int:
    """c_lam summed over compositions of every total t in d..s.

    (-1)^d k! / (...) * sum_t sum_M (-1)^t C(n, s - t) prod m_i^(lam_i - 1)
    """
    _check_expansion_indices(s, k, n)
    _check_partition(k, lam)
    d = lam.length
    if d > s:
        return 0

    total = 0
    for t in range(d, s + 1):
        inner = sum(
            _composition_weight(composition, lam)
            for composition in compositions_of(t, d))
        total += (-1)**t * int(binomial(n, s - t)) * inner
    return _exact_divide((-1)**d * factorial(k) * total, lam)


@lru_cache(maxsize=None)
def q_polynomial(s: int, k: int, n: int) -> QPolynomial:
    _check_expansion_indices(s, k, n)
    terms = []
    for lam in partitions_of(k):
        coefficient = c_lambda(s, k, n, lam)
        if coefficient:
            terms.append((lam, coefficient))
    return QPolynomial(s, k, n, tuple(terms))


def moser_value_via_sigma(s: int, k: int, n: int) -> Fraction:
    """M_{s,k,n}, read off the expansion instead of the binomial sum."""
    return Fraction(q_polynomial(s, k, n).top_coefficient)


def moser_value_eulerian_form(s: int, k: int, x: RationalLike) -> Fraction:
    """(-1)^(s-1) sum_j (-1)^j <k-1, s-j-1> C(x-k, j)."""
    _check_indices(s, k)
    x = to_rational(x)
    return (-1)**(s - 1) * sum(((-1)**j * eulerian(k - 1, s - j - 1) *
                                binomial(x - k, j) for j in range(s)),
                               Fraction(0))


def moser_value_stirling_forms(s: int, k: int,
                               x: RationalLike) -> Tuple[Fraction, Fraction]:
    """F_{s,k}(x) through second-kind Stirling numbers, two ways.

    first:  sum_{i=1}^{k} (-1)^(i-1) (i-1)! S(k, i) C(x-i, s-i)
    second: sum_{i=0}^{k} (-1)^(i+k-1) i! S(k-1, i) C(x-i-1, s-1)
    """
    _check_indices(s, k)
    x = to_rational(x)
    first = sum(((-1)**(i - 1) * factorial(i - 1) * stirling2(k, i) *
                 binomial(x - i, s - i) for i in range(1, k + 1)),
                Fraction(0))
    # i = 0 only contributes when k = 1, through S(0, 0) = 1
    second = sum(((-1)**(i + k - 1) * factorial(i) * stirling2(k - 1, i) *
                  binomial(x - i - 1, s - 1) for i in range(0, k + 1)),
                 Fraction(0))
    return first, second


def eulerian_polynomial(n: int) -> DensePolynomial:
    """Row polynomial sum_m <n, m> x^m."""
    if n < 0:
        raise InvalidArgumentError(f"Needs n >= 0, got n={n}")
    return DensePolynomial.monomial(eulerian_row(n))


def moser_table(s: int, k_max: int, n: int) -> List[Tuple[int, Fraction]]:
    """(k, F_{s,k}(n)) for k = 1..k_max."""
    _check_indices(s, k_max)
    return [(k, moser_value(s, k, n)) for k in range(1, k_max + 1)]
