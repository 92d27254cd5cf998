from fractions import Fraction
from math import comb
from math import factorial
from typing import Callable, List

from moserpoly.combinatorics import compositions_of
from moserpoly.combinatorics import eulerian
from moserpoly.combinatorics import eulerian_recurrence
from moserpoly.combinatorics import knuth_eulerian
from moserpoly.combinatorics import partition_count
from moserpoly.combinatorics import partitions_of
from moserpoly.moser import c_lambda
from moserpoly.moser import c_lambda_alt
from moserpoly.moser import moser_coefficients
from moserpoly.moser import moser_value
from moserpoly.moser import moser_value_eulerian_form
from moserpoly.moser import moser_value_stirling_forms
from moserpoly.moser import moser_value_via_sigma
from moserpoly.moser.identities import check_binomial_identity
from moserpoly.moser.identities import check_duality
from moserpoly.moser.identities import check_multistep
from moserpoly.moser.identities import check_recurrences
from moserpoly.moser.identities import eulerian_poly_identity
from moserpoly.polynomials import Basis
from moserpoly.polynomials import convert_basis
from moserpoly.polynomials import DensePolynomial
from moserpoly.recovery import solvability

from .base import BaseSuite
from .base import PropertyResult

GRID_POINTS = [Fraction(x) for x in range(-5, 16)] + [
    Fraction(2 * x + 1, 2) for x in range(-5, 15)
]


def _alternates(p: DensePolynomial) -> bool:
    # (-1)^j c_j keeps one sign; zero coefficients are skipped
    signs = {(-1)**j * c > 0 for j, c in enumerate(p.coefficients) if c != 0}
    return len(signs) <= 1


class IdentitiesSuite(BaseSuite):
    """
    Exhaustive exact checks over small index grids: Eulerian and Stirling
    numbers, the closed forms of F_{s,k} and every identity between them.
    """

    suite_name = "identities"

    def properties(self) -> List[Callable[[], PropertyResult]]:
        return [
            self.eulerian_symmetry,
            self.eulerian_row_sums,
            self.eulerian_recurrence,
            self.knuth_identity,
            self.stirling1_basis_change,
            self.partition_counts,
            self.composition_counts,
            self.formula_agreement,
            self.moser_coefficient_shape,
            self.duality,
            self.recurrences,
            self.multistep,
            self.eulerian_polynomial_identity,
            self.binomial_identity,
            self.c_lambda_forms_agree,
            self.c_lambda_support,
            self.sigma_top_coefficient,
            self.solvability_verdicts,
        ]

    def eulerian_symmetry(self) -> PropertyResult:
        return self._check(
            "eulerian_symmetry",
            ({"n": n, "m": m} for n in range(1, 13) for m in range(n)),
            lambda n, m: eulerian(n, m) == eulerian(n, n - 1 - m))

    def eulerian_row_sums(self) -> PropertyResult:
        return self._check(
            "eulerian_row_sums", ({"n": n} for n in range(1, 13)),
            lambda n: sum(eulerian(n, m) for m in range(n)) == factorial(n))

    def eulerian_recurrence(self) -> PropertyResult:
        return self._check(
            "eulerian_recurrence",
            ({"n": n, "m": m} for n in range(13) for m in range(-1, n + 1)),
            lambda n, m: eulerian(n, m) == eulerian_recurrence(n, m))

    def knuth_identity(self) -> PropertyResult:
        return self._check(
            "knuth_identity",
            ({"n": n, "k": k} for n in range(1, 11) for k in range(n)),
            lambda n, k: eulerian(n, k) == knuth_eulerian(n, k))

    def stirling1_basis_change(self) -> PropertyResult:

        def expands(i):
            falling = DensePolynomial.falling([0] * i + [1])
            return convert_basis(falling,
                                 Basis.MONOMIAL) == DensePolynomial.from_roots(
                                     range(i))

        return self._check("stirling1_basis_change",
                           ({"i": i} for i in range(11)), expands)

    def partition_counts(self) -> PropertyResult:

        def counted(k):
            partitions = partitions_of(k)
            return (len(set(partitions)) == len(partitions) ==
                    partition_count(k) and
                    all(p.weight == k for p in partitions))

        return self._check("partition_counts", ({"k": k} for k in range(1, 13)),
                           counted)

    def composition_counts(self) -> PropertyResult:
        return self._check(
            "composition_counts",
            ({"t": t, "d": d} for t in range(1, 13) for d in range(1, 13)),
            lambda t, d: len(compositions_of(t, d)) == comb(t - 1, d - 1))

    def formula_agreement(self) -> PropertyResult:
        coefficients = {(s, k): moser_coefficients(s, k)
                        for s in range(1, 9) for k in range(1, 9)}

        def agree(s, k, x):
            value = moser_value(s, k, x)
            first, second = moser_value_stirling_forms(s, k, x)
            return (value == moser_value_eulerian_form(s, k, x) == first ==
                    second == coefficients[(s, k)].eval(x))

        return self._check("formula_agreement",
                           ({"s": s, "k": k, "x": x}
                            for s in range(1, 9) for k in range(1, 9)
                            for x in GRID_POINTS), agree)

    def moser_coefficient_shape(self) -> PropertyResult:

        def shaped(s, k):
            polynomial = moser_coefficients(s, k)
            normalized = polynomial.normalized()
            return (polynomial.coefficients.degree == s - 1 and
                    _alternates(normalized) and
                    all(polynomial.eval(n) == moser_value(s, k, n)
                        for n in range(0, 2 * s + 1)))

        return self._check("moser_coefficient_shape",
                           ({"s": s, "k": k}
                            for s in range(1, 9) for k in range(1, 9)), shaped)

    def duality(self) -> PropertyResult:
        return self._check(
            "duality",
            ({"s": s, "k": k, "n": n} for n in range(2, 11)
             for k in range(2, n + 1) for s in range(1, n + 1)), check_duality)

    def recurrences(self) -> PropertyResult:
        return self._check(
            "recurrences",
            ({"s": s, "k": k, "n": n} for s in range(2, 11)
             for k in range(1, 11) for n in range(2, 11)), check_recurrences)

    def multistep(self) -> PropertyResult:
        return self._check(
            "multistep",
            ({"s": s, "k": k, "x": x, "d": d} for s in range(1, 9)
             for k in range(1, 9) for x in range(-2, 11) for d in range(1, 5)),
            check_multistep)

    def eulerian_polynomial_identity(self) -> PropertyResult:
        return self._check(
            "eulerian_polynomial_identity",
            ({"k": k, "n": n} for n in range(2, 11) for k in range(2, n + 1)),
            eulerian_poly_identity)

    def binomial_identity(self) -> PropertyResult:
        return self._check(
            "binomial_identity",
            ({"s": s, "j": j, "n": n} for n in range(11)
             for s in range(n + 1) for j in range(s + 1)),
            check_binomial_identity)

    def c_lambda_forms_agree(self) -> PropertyResult:
        return self._check(
            "c_lambda_forms_agree",
            ({"s": s, "k": k, "n": n, "lam": lam} for n in range(1, 10)
             for k in range(1, min(n, 7) + 1) for s in range(1, min(n, 7) + 1)
             for lam in partitions_of(k)),
            lambda s, k, n, lam: c_lambda(s, k, n, lam) == c_lambda_alt(
                s, k, n, lam))

    def c_lambda_support(self) -> PropertyResult:
        # c_lambda raises IntegralityError on a remainder, which _check records
        return self._check(
            "c_lambda_support",
            ({"s": s, "k": k, "n": n, "lam": lam} for n in range(1, 10)
             for k in range(1, min(n, 7) + 1) for s in range(1, min(n, 7) + 1)
             for lam in partitions_of(k) if lam.length > s),
            lambda s, k, n, lam: c_lambda(s, k, n, lam) == 0)

    def sigma_top_coefficient(self) -> PropertyResult:
        return self._check(
            "sigma_top_coefficient",
            ({"s": s, "k": k, "n": n} for n in range(1, 9)
             for k in range(1, n + 1) for s in range(1, n + 1)),
            lambda s, k, n: moser_value_via_sigma(s, k, n) == moser_value(
                s, k, n))

    def solvability_verdicts(self) -> PropertyResult:

        def verdict(n, s):
            report = solvability(n, s)
            polynomials = [moser_coefficients(s, k) for k in range(1, n + 1)]
            vanishing = tuple(k for k, p in enumerate(polynomials, start=1)
                              if p.eval(n) == 0)
            return report.vanishing_k == vanishing and report.solvable == (
                not vanishing)

        return self._check("solvability_verdicts",
                           ({"n": n, "s": s}
                            for n in range(1, 11) for s in range(1, n + 1)),
                           verdict)
