from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st
import pytest

from moserpoly.errors import InvalidArgumentError
from moserpoly.polynomials import Basis
from moserpoly.polynomials import convert_basis
from moserpoly.polynomials import DensePolynomial
from moserpoly.polynomials import divide_by_linear
from moserpoly.polynomials import evaluate
from moserpoly.polynomials import rational_roots
from moserpoly.polynomials import roots_numeric

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def test_falling_to_monomial():
    falling = DensePolynomial.falling((0, 0, 1))
    assert convert_basis(falling, Basis.MONOMIAL) == DensePolynomial.monomial(
        (0, -1, 1))


def test_monomial_to_falling():
    square = DensePolynomial.monomial((0, 0, 1))
    assert convert_basis(square, Basis.FALLING) == DensePolynomial.falling(
        (0, 1, 1))


def test_zero_polynomial_converts_to_zero():
    zero = DensePolynomial.monomial(())
    converted = convert_basis(zero, Basis.FALLING)
    assert converted.is_zero
    assert converted.degree == -1


@given(st.lists(rationals, max_size=21))
def test_basis_round_trip(coefficients):
    p = DensePolynomial.monomial(coefficients)
    back = convert_basis(convert_basis(p, Basis.FALLING), Basis.MONOMIAL)
    assert back == p


@given(st.lists(rationals, max_size=8), rationals)
def test_bases_evaluate_alike(coefficients, x):
    p = DensePolynomial.monomial(coefficients)
    assert evaluate(convert_basis(p, Basis.FALLING), x) == evaluate(p, x)


@pytest.mark.parametrize("coefficients, x, expected", [
    ((6, -5, 1), 2, 0),
    ((6, -5, 1), 0, 6),
    ((-2, 1), Fraction(7, 2), Fraction(3, 2)),
])
def test_evaluate(coefficients, x, expected):
    assert evaluate(DensePolynomial.monomial(coefficients), x) == expected


def test_arithmetic():
    p = DensePolynomial.monomial((1, 1))
    q = DensePolynomial.monomial((-1, 1))
    assert p * q == DensePolynomial.monomial((-1, 0, 1))
    assert (p - p).is_zero
    assert p**3 == DensePolynomial.monomial((1, 3, 3, 1))
    assert DensePolynomial.from_roots([2, 3]) == DensePolynomial.monomial(
        (6, -5, 1))
    assert str(DensePolynomial.monomial((6, -5, 1))) == "x^2-5*x+6"


def test_mixed_basis_arithmetic_rejected():
    with pytest.raises(InvalidArgumentError):
        DensePolynomial.monomial((1, )) + DensePolynomial.falling((1, ))


def test_divide_by_linear():
    quotient, remainder = divide_by_linear(
        DensePolynomial.monomial((6, -5, 1)), 2)
    assert quotient == DensePolynomial.monomial((-3, 1))
    assert remainder == 0


def _close(found, expected, tol):
    key = lambda z: (complex(z).real, complex(z).imag)
    pairs = zip(sorted(found, key=key), sorted(expected, key=key))
    return all(abs(a - b) < tol for a, b in pairs)


def test_roots_numeric_simple():
    approximation = roots_numeric(DensePolynomial.monomial((-1, 0, 1)))
    assert approximation.converged
    assert _close(approximation.roots, [-1, 1], 1e-10)


def test_roots_numeric_degree_five():
    p = DensePolynomial.monomial((-120, 274, -225, 85, -15, 1))
    approximation = roots_numeric(p)
    assert approximation.converged
    assert _close(approximation.roots, [1, 2, 3, 4, 5], 1e-8)


def test_roots_numeric_triple_root():
    approximation = roots_numeric(DensePolynomial.from_roots([1, 1, 1]))
    assert len(approximation.roots) == 3
    assert all(abs(z - 1) < 1e-3 for z in approximation.roots)


def test_roots_numeric_complex_pair():
    approximation = roots_numeric(DensePolynomial.monomial((1, 0, 1)))
    assert approximation.converged
    assert _close(approximation.roots, [-1j, 1j], 1e-10)


def test_roots_numeric_rejects_constants():
    with pytest.raises(InvalidArgumentError):
        roots_numeric(DensePolynomial.constant(3))


@pytest.mark.parametrize("coefficients, roots, remainder", [
    ((6, -5, 1), [2, 3], (1, )),
    ((-2, 0, 1), [], (-2, 0, 1)),
    ((1, -3, 2), [Fraction(1, 2), 1], (2, )),
    ((0, 0, 0, 1), [0, 0, 0], (1, )),
])
def test_rational_roots(coefficients, roots, remainder):
    found, rest = rational_roots(DensePolynomial.monomial(coefficients))
    assert found == roots
    assert rest == DensePolynomial.monomial(remainder)


@given(st.lists(st.fractions(min_value=-6, max_value=6, max_denominator=4),
                min_size=1,
                max_size=6))
def test_rational_roots_recovers_every_root(roots):
    found, rest = rational_roots(DensePolynomial.from_roots(roots))
    assert found == sorted(roots)
    assert rest.degree == 0
