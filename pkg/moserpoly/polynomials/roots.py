"""Root finders: exact rational roots and Durand-Kerner in double precision."""

from dataclasses import dataclass
from fractions import Fraction
import logging
from math import lcm
from typing import List, Sequence, Tuple

import numpy as np
from sympy import divisor_count
from sympy import divisors

from moserpoly.errors import EnumerationLimitError
from moserpoly.errors import InvalidArgumentError
from moserpoly.polynomials.dense import Basis
from moserpoly.polynomials.dense import DensePolynomial
from moserpoly.polynomials.dense import divide_by_linear

MAX_ITERATIONS = 1000
MAX_DIVISOR_CANDIDATES = 10**6


@dataclass(frozen=True)
class RootApproximation:
    """Outcome of a simultaneous root iteration.

    When ``converged`` is False, ``roots`` holds the best finite iterate.
    """

    roots: Tuple[complex, ...]
    residuals: Tuple[float, ...]
    converged: bool
    iterations: int

    @property
    def max_residual(self) -> float:
        return max(self.residuals, default=0.0)


def _require_monomial(p: DensePolynomial):
    if p.basis != Basis.MONOMIAL:
        raise InvalidArgumentError("Root finding needs the monomial basis")
    if p.is_zero:
        raise InvalidArgumentError("The zero polynomial has no finite root set")


def roots_numeric(p: DensePolynomial,
                  tol: float = 1e-12,
                  max_iterations: int = MAX_ITERATIONS) -> RootApproximation:
    """All complex roots of p by Durand-Kerner (Weierstrass) iteration.

    Starts from the perturbed circle radius * (0.4 + 0.9i)^j, where radius is
    the Cauchy bound, and stops once every root moves less than ``tol`` or
    after ``max_iterations`` sweeps.
    """
    _require_monomial(p)
    if p.degree < 1:
        raise InvalidArgumentError("Root finding needs degree >= 1")
    return roots_of_coefficients([float(c) for c in p.coefficients], tol,
                                 max_iterations)


def roots_of_coefficients(coefficients: Sequence[complex],
                          tol: float = 1e-12,
                          max_iterations: int = MAX_ITERATIONS
                          ) -> RootApproximation:
    """Durand-Kerner on complex coefficients given lowest degree first."""
    # Highest degree first, as np.polyval expects
    original = np.array(list(reversed(coefficients)), dtype=np.complex128)
    original = np.trim_zeros(original, "f")
    n = len(original) - 1
    if n < 1:
        raise InvalidArgumentError("Root finding needs degree >= 1")
    monic = original / original[0]

    radius = 1.0 + float(np.max(np.abs(monic[1:])))
    z = radius * (0.4 + 0.9j)**np.arange(n, dtype=np.float64)

    converged = False
    iterations = 0
    with np.errstate(all="ignore"):
        for iterations in range(1, max_iterations + 1):
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, 1.0)
            delta = np.polyval(monic, z) / diff.prod(axis=1)
            candidate = z - delta
            if not np.all(np.isfinite(candidate)):
                logging.warning(
                    f"Durand-Kerner hit a non-finite iterate after {iterations} sweeps"
                )
                break
            z = candidate
            if float(np.max(np.abs(delta))) < tol:
                converged = True
                break

        residuals = np.abs(np.polyval(original, z))

    if not converged:
        logging.debug(
            f"Durand-Kerner stopped unconverged at degree {n} after {iterations} sweeps"
        )

    return RootApproximation(roots=tuple(complex(r) for r in z),
                             residuals=tuple(float(r) for r in residuals),
                             converged=converged,
                             iterations=iterations)


def _integer_coefficients(p: DensePolynomial) -> List[int]:
    scale = lcm(*(c.denominator for c in p.coefficients))
    return [int(c * scale) for c in p.coefficients]


def _candidates(constant: int, leading: int) -> List[Fraction]:
    """Rational-root-theorem candidates +-a/b with a | constant, b | leading."""
    count = 2 * int(divisor_count(abs(constant))) * int(
        divisor_count(abs(leading)))
    if count > MAX_DIVISOR_CANDIDATES:
        raise EnumerationLimitError(
            f"{count} rational root candidates exceed the cap of "
            f"{MAX_DIVISOR_CANDIDATES}")
    numerators = [int(d) for d in divisors(abs(constant))]
    denominators = [int(d) for d in divisors(abs(leading))]
    return sorted({
        Fraction(sign * a, b)
        for a in numerators for b in denominators for sign in (1, -1)
    })


def rational_roots(
        p: DensePolynomial) -> Tuple[List[Fraction], DensePolynomial]:
    """Deflate every rational root of p.

    Returns the roots in ascending order with multiplicity, and a remainder
    with no rational roots such that remainder * prod(x - r) == p.
    """
    _require_monomial(p)
    roots: List[Fraction] = []
    current = p

    while current.degree >= 1 and current.coefficients[0] == 0:
        roots.append(Fraction(0))
        current = DensePolynomial(current.coefficients[1:], Basis.MONOMIAL)

    if current.degree >= 1:
        integers = _integer_coefficients(current)
        for candidate in _candidates(integers[0], integers[-1]):
            while current.degree >= 1:
                quotient, remainder = divide_by_linear(current, candidate)
                if remainder != 0:
                    break
                roots.append(candidate)
                current = quotient
            if current.degree < 1:
                break

    logging.debug(
        f"Deflated {len(roots)} rational roots, remainder degree {current.degree}"
    )
    return sorted(roots), current
