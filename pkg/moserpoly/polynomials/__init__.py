"""Dense univariate polynomials over exact rationals.

A polynomial is stored either in the monomial basis {x^j} or in the
falling-factorial basis {x^[j]}; ``convert_basis`` moves between them with
Stirling numbers, exactly. The numeric and rational root finders live in
``moserpoly.polynomials.roots``.
"""

from .dense import Basis
from .dense import convert_basis
from .dense import DensePolynomial
from .dense import divide_by_linear
from .dense import evaluate
from .roots import RootApproximation
from .roots import rational_roots
from .roots import roots_of_coefficients
from .roots import roots_numeric
