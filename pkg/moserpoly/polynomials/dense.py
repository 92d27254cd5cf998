"""Dense polynomials in the monomial or falling-factorial basis."""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

from moserpoly.combinatorics import format_rational
from moserpoly.combinatorics import RationalLike
from moserpoly.combinatorics import stirling1_unsigned
from moserpoly.combinatorics import stirling2
from moserpoly.combinatorics import to_rational
from moserpoly.errors import InvalidArgumentError


class Basis(str, Enum):
    MONOMIAL = "monomial"
    FALLING = "falling-factorial"


def _trim(coefficients: Iterable[RationalLike]) -> Tuple[Fraction, ...]:
    coefficients = [to_rational(c) for c in coefficients]
    while coefficients and coefficients[-1] == 0:
        coefficients.pop()
    return tuple(coefficients)


@dataclass(frozen=True)
class DensePolynomial:
    """Coefficients indexed by degree; trailing zeros are always trimmed."""

    coefficients: Tuple[Fraction, ...] = ()
    basis: Basis = Basis.MONOMIAL

    def __post_init__(self):
        object.__setattr__(self, "coefficients", _trim(self.coefficients))
        object.__setattr__(self, "basis", Basis(self.basis))

    @classmethod
    def monomial(cls, coefficients: Sequence[RationalLike]) -> "DensePolynomial":
        return cls(tuple(coefficients), Basis.MONOMIAL)

    @classmethod
    def falling(cls, coefficients: Sequence[RationalLike]) -> "DensePolynomial":
        return cls(tuple(coefficients), Basis.FALLING)

    @classmethod
    def constant(cls, value: RationalLike) -> "DensePolynomial":
        return cls((value, ))

    @classmethod
    def from_roots(cls,
                   roots: Iterable[RationalLike],
                   leading: RationalLike = 1) -> "DensePolynomial":
        """leading * prod (x - r) in the monomial basis."""
        result = cls.constant(leading)
        for r in roots:
            result = result * cls.monomial((-to_rational(r), 1))
        return result

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def leading(self) -> Fraction:
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    def coefficient(self, j: int) -> Fraction:
        if 0 <= j < len(self.coefficients):
            return self.coefficients[j]
        return Fraction(0)

    def eval(self, x: RationalLike) -> Fraction:
        return evaluate(self, x)

    def __call__(self, x: RationalLike) -> Fraction:
        return evaluate(self, x)

    def _same_basis(self, other: "DensePolynomial"):
        if self.basis != other.basis:
            raise InvalidArgumentError(
                f"Basis mismatch: {self.basis.value} vs {other.basis.value}")

    def __add__(self, other: "DensePolynomial") -> "DensePolynomial":
        self._same_basis(other)
        size = max(len(self.coefficients), len(other.coefficients))
        return DensePolynomial(
            tuple(self.coefficient(j) + other.coefficient(j)
                  for j in range(size)), self.basis)

    def __neg__(self) -> "DensePolynomial":
        return DensePolynomial(tuple(-c for c in self.coefficients),
                               self.basis)

    def __sub__(self, other: "DensePolynomial") -> "DensePolynomial":
        return self + (-other)

    def __mul__(self, other) -> "DensePolynomial":
        if not isinstance(other, DensePolynomial):
            factor = to_rational(other)
            return DensePolynomial(
                tuple(c * factor for c in self.coefficients), self.basis)
        if self.basis != Basis.MONOMIAL or other.basis != Basis.MONOMIAL:
            raise InvalidArgumentError(
                "Polynomial products are defined in the monomial basis only")
        if self.is_zero or other.is_zero:
            return DensePolynomial((), Basis.MONOMIAL)
        product = [Fraction(0)] * (len(self.coefficients) +
                                   len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                product[i + j] += a * b
        return DensePolynomial(tuple(product), Basis.MONOMIAL)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "DensePolynomial":
        if exponent < 0:
            raise InvalidArgumentError("Negative polynomial powers")
        result = DensePolynomial.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def __str__(self):
        if self.is_zero:
            return "0"
        symbol = "x" if self.basis == Basis.MONOMIAL else "x^[{}]"
        terms = []
        for j in range(self.degree, -1, -1):
            c = self.coefficients[j]
            if c == 0:
                continue
            if j == 0:
                power = ""
            elif self.basis == Basis.MONOMIAL:
                power = "x" if j == 1 else f"x^{j}"
            else:
                power = symbol.format(j)
            if power and c == 1:
                terms.append(f"+{power}")
            elif power and c == -1:
                terms.append(f"-{power}")
            else:
                text = format_rational(c)
                sign = "" if text.startswith("-") else "+"
                terms.append(f"{sign}{text}{'*' + power if power else ''}")
        return "".join(terms).lstrip("+")


def convert_basis(p: DensePolynomial, target: Basis) -> DensePolynomial:
    """Re-express p in the target basis, exactly."""
    target = Basis(target)
    if p.basis == target:
        return p
    size = len(p.coefficients)

    if target == Basis.FALLING:
        # x^i = sum_j S(i, j) x^[j]
        beta = [
            sum((p.coefficients[i] * stirling2(i, j)
                 for i in range(j, size)), Fraction(0))
            for j in range(size)
        ]
        return DensePolynomial(tuple(beta), Basis.FALLING)

    # x^[j] = sum_i (-1)^(j-i) c(j, i) x^i
    alpha = [
        sum((p.coefficients[j] * (-1)**(j - i) * stirling1_unsigned(j, i)
             for j in range(i, size)), Fraction(0)) for i in range(size)
    ]
    return DensePolynomial(tuple(alpha), Basis.MONOMIAL)


def evaluate(p: DensePolynomial, x: RationalLike) -> Fraction:
    """Horner evaluation in the polynomial's own basis."""
    x = to_rational(x)
    result = Fraction(0)
    if p.basis == Basis.MONOMIAL:
        for c in reversed(p.coefficients):
            result = result * x + c
        return result

    # b_0 + x(b_1 + (x-1)(b_2 + (x-2)(...)))
    for j in range(p.degree, -1, -1):
        result = p.coefficients[j] + (x - j) * result
    return result


def divide_by_linear(p: DensePolynomial,
                     root: RationalLike) -> Tuple[DensePolynomial, Fraction]:
    """Synthetic division by (x - root); returns (quotient, remainder)."""
    if p.basis != Basis.MONOMIAL:
        raise InvalidArgumentError("Synthetic division needs the monomial basis")
    root = to_rational(root)
    if p.degree < 1:
        return DensePolynomial((), Basis.MONOMIAL), p.leading

    quotient = [Fraction(0)] * p.degree
    carry = Fraction(0)
    for j in range(p.degree, 0, -1):
        carry = carry * root + p.coefficients[j]
        quotient[j - 1] = carry
    remainder = carry * root + p.coefficients[0]
    return DensePolynomial(tuple(quotient), Basis.MONOMIAL), remainder
