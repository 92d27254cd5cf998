"""Exact checks of the identities satisfied by Moser polynomials.

Each check evaluates both sides with ``Fraction`` arithmetic and returns
whether they agree; preconditions are enforced with InvalidArgumentError.
"""

from fractions import Fraction

from moserpoly.combinatorics import binomial
from moserpoly.combinatorics import RationalLike
from moserpoly.combinatorics import to_rational
from moserpoly.errors import InvalidArgumentError
from moserpoly.moser import eulerian_polynomial
from moserpoly.moser import moser_value
from moserpoly.polynomials import DensePolynomial


def check_duality(s: int, k: int, n: int) -> bool:
    """F_{s,k}(n) = (-1)^k F_{n-s,k}(n)."""
    if k < 2 or n < k:
        raise InvalidArgumentError(
            f"Duality needs k > 1 and n >= k, got k={k}, n={n}")
    if not 1 <= s <= n:
        raise InvalidArgumentError(f"Duality needs 1 <= s <= n, got s={s}")
    return moser_value(s, k, n) == (-1)**k * moser_value(n - s, k, n)


def check_recurrences(s: int, k: int, n: int) -> bool:
    """F_{s,k}(n+1) = F_{s,k}(n) + F_{s-1,k}(n) and
    F_{s,k+1}(n) = s F_{s,k}(n) - n F_{s-1,k}(n-1)."""
    if s < 2 or k < 1 or n < 2:
        raise InvalidArgumentError(
            f"Recurrences need s >= 2, k >= 1, n >= 2, got s={s}, k={k}, n={n}"
        )
    shift = moser_value(s, k, n + 1) == (moser_value(s, k, n) +
                                         moser_value(s - 1, k, n))
    raise_k = moser_value(s, k + 1, n) == (s * moser_value(s, k, n) -
                                           n * moser_value(s - 1, k, n - 1))
    return shift and raise_k


def check_multistep(s: int, k: int, x: RationalLike, d: int) -> bool:
    """Both d-step forms of the shift recurrence."""
    if d < 1:
        raise InvalidArgumentError(f"Multistep needs d >= 1, got d={d}")
    if s < 1 or k < 1:
        raise InvalidArgumentError(f"Needs s >= 1 and k >= 1, got s={s}, k={k}")
    x = to_rational(x)

    binomial_side = sum((binomial(d, j) * moser_value(s + j, k, x)
                         for j in range(d + 1)), Fraction(0))
    first = moser_value(s + d, k, x + d) == binomial_side

    telescoped = moser_value(s, k, x) + sum(
        (moser_value(s - 1, k, x + j) for j in range(d)), Fraction(0))
    second = moser_value(s, k, x + d) == telescoped

    return first and second


def eulerian_poly_identity(k: int, n: int) -> bool:
    """(1-x)^(n-k) A_{k-1}(x) = sum_{s=1}^{n} (-1)^(s-1) F_{s,k}(n) x^(s-1)."""
    if k < 2 or n < k:
        raise InvalidArgumentError(
            f"Needs k >= 2 and n >= k, got k={k}, n={n}")
    lhs = DensePolynomial.monomial((1, -1))**(n - k) * eulerian_polynomial(k - 1)
    rhs = DensePolynomial.monomial([(-1)**(s - 1) * moser_value(s, k, n)
                                    for s in range(1, n + 1)])
    return lhs == rhs


def check_binomial_identity(s: int, j: int, n: int) -> bool:
    """sum_{i=0}^{s} C(i, j) C(n-i, n-s) = C(n+1, s-j)."""
    if not 0 <= j <= s <= n:
        raise InvalidArgumentError(
            f"Needs 0 <= j <= s <= n, got s={s}, j={j}, n={n}")
    lhs = sum((binomial(i, j) * binomial(n - i, n - s) for i in range(s + 1)),
              Fraction(0))
    return lhs == binomial(n + 1, s - j)
