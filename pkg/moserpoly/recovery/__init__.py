"""Recovering an n-multiset from its s-sums.

When no F_{s,k}(n) vanishes for k = 1..n, the power sums of A follow from
those of S = A^(s) one at a time:

    p_k(A) = (p_k(S) - Q~_{s,k,n}(p_1(A), ..., p_{k-1}(A))) / F_{s,k}(n)

A is then the root multiset of the monic polynomial whose elementary
symmetric coefficients come from Newton's identities. Roots are split over
the rationals (``exact``), by Durand-Kerner (``numeric``) or by trying the
first and falling back to the second (``auto``). Every result is checked by
recomputing its s-sums.
"""

from dataclasses import dataclass
from fractions import Fraction
import logging
from math import comb
from math import prod
from typing import List, Sequence, Tuple, Union

import numpy as np

from moserpoly.combinatorics import format_rational
from moserpoly.errors import EnumerationLimitError
from moserpoly.errors import InvalidArgumentError
from moserpoly.errors import IrrationalRootsError
from moserpoly.errors import RootFindingError
from moserpoly.errors import UnsolvableError
from moserpoly.errors import VerificationError
from moserpoly.moser import moser_value
from moserpoly.moser import q_polynomial
from moserpoly.polynomials import DensePolynomial
from moserpoly.polynomials import rational_roots
from moserpoly.polynomials import roots_numeric
from moserpoly.polynomials import roots_of_coefficients
from moserpoly.recovery.search import find_ambiguous_pairs
from moserpoly.recovery.search import pair_consistency
from moserpoly.symfun import apply_q
from moserpoly.symfun import complex_s_sums
from moserpoly.symfun import newton_p_to_e
from moserpoly.symfun import newton_p_to_e_numeric
from moserpoly.symfun import NumberMultiset
from moserpoly.symfun import power_sum_numeric
from moserpoly.symfun import power_sums
from moserpoly.symfun import PowerSumVector
from moserpoly.symfun import s_sums

MODES = ("exact", "numeric", "auto")
ROOT_TOLERANCE = 1e-12


@dataclass(frozen=True)
class SolvabilityReport:
    n: int
    s: int
    values: Tuple[Fraction, ...]
    vanishing_k: Tuple[int, ...]

    @property
    def solvable(self) -> bool:
        return not self.vanishing_k

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "s": self.s,
            "values": [format_rational(v) for v in self.values],
            "vanishing_k": list(self.vanishing_k),
            "solvable": self.solvable,
        }


@dataclass(frozen=True)
class RecoveryResult:
    """A recovered multiset with the power sums it was rebuilt from.

    ``multiset`` is a NumberMultiset in exact mode and a tuple of complex
    numbers sorted by (real, imag) in numeric mode. ``power_sums`` is exact
    unless the s-sums themselves were given as complex numbers.
    """

    multiset: Union[NumberMultiset, Tuple[complex, ...]]
    mode: str
    residual: float
    power_sums: Union[PowerSumVector, Tuple[complex, ...]]

    def to_dict(self) -> dict:
        if isinstance(self.multiset, NumberMultiset):
            elements = self.multiset.to_strings()
        else:
            elements = [[z.real, z.imag] for z in self.multiset]
        if isinstance(self.power_sums, PowerSumVector):
            sums = self.power_sums.to_strings()
        else:
            sums = [[complex(z).real, complex(z).imag] for z in self.power_sums]
        return {
            "mode": self.mode,
            "multiset": elements,
            "residual": repr(float(self.residual)),
            "power_sums": sums,
        }


def _check_pair(n: int, s: int):
    if n < 1 or not 1 <= s <= n:
        raise InvalidArgumentError(f"Needs 1 <= s <= n, got n={n}, s={s}")


def solvability(n: int, s: int) -> SolvabilityReport:
    """F_{s,k}(n) for k = 1..n and the k where it vanishes."""
    _check_pair(n, s)
    values = tuple(moser_value(s, k, n) for k in range(1, n + 1))
    vanishing = tuple(k for k, v in enumerate(values, start=1) if v == 0)
    return SolvabilityReport(n, s, values, vanishing)


def solvability_table(n_max: int) -> List[SolvabilityReport]:
    """Reports for every 1 <= s <= n <= n_max."""
    if not 1 <= n_max <= 64:
        raise InvalidArgumentError(f"n_max must be in [1, 64], got {n_max}")
    return [
        solvability(n, s) for n in range(1, n_max + 1)
        for s in range(1, n + 1)
    ]


def recover_power_sums(S: NumberMultiset, n: int, s: int) -> PowerSumVector:
    """p_1(A)..p_n(A) from the s-sum multiset S = A^(s)."""
    _check_pair(n, s)
    if S.size != comb(n, s):
        raise InvalidArgumentError(
            f"Expected C({n},{s}) = {comb(n, s)} s-sums, got {S.size}")

    report = solvability(n, s)
    if not report.solvable:
        raise UnsolvableError(report)

    targets = power_sums(S, n)
    recovered: List[Fraction] = []
    for k in range(1, n + 1):
        q = q_polynomial(s, k, n)
        # The tilde part never reads p_k, a zero placeholder fills the slot
        known = PowerSumVector(tuple(recovered) + (Fraction(0), ), n)
        rest = apply_q(q.tilde, known)
        recovered.append((targets.p(k) - rest) / q.top_coefficient)

    logging.debug(f"Recovered power sums {[format_rational(p) for p in recovered]}")
    return PowerSumVector(tuple(recovered), n)


def characteristic_polynomial(p: PowerSumVector) -> DensePolynomial:
    """x^n - e_1 x^(n-1) + e_2 x^(n-2) - ... + (-1)^n e_n."""
    e = newton_p_to_e(p)
    n = len(e)
    coefficients = [(-1)**(n - j) * e[n - j - 1] for j in range(n)]
    return DensePolynomial.monomial(coefficients + [Fraction(1)])


def _recover_exact(S: NumberMultiset, s: int, p: PowerSumVector,
                   polynomial: DensePolynomial) -> RecoveryResult:
    roots, remainder = rational_roots(polynomial)
    if remainder.degree >= 1:
        raise IrrationalRootsError(
            f"Recovered polynomial keeps an irrational factor of degree {remainder.degree}"
        )
    multiset = NumberMultiset(tuple(roots))
    if s_sums(multiset, s) != S:
        raise VerificationError(
            f"s-sums of the recovered multiset {multiset} differ from the input")
    return RecoveryResult(multiset, "exact", 0.0, p)


def match_residual(recovered: np.ndarray, targets: np.ndarray) -> float:
    """Largest deviation of a greedy nearest-neighbour matching.

    Both sides are sorted by (real, imag); each recovered value then takes the
    closest target not used yet.
    """
    recovered = sorted(recovered, key=lambda z: (z.real, z.imag))
    remaining = sorted(targets, key=lambda z: (z.real, z.imag))
    worst = 0.0
    for value in recovered:
        distances = [abs(value - t) for t in remaining]
        best = int(np.argmin(distances))
        worst = max(worst, distances[best])
        remaining.pop(best)
    return worst


def _recover_numeric(S: NumberMultiset, s: int, p: PowerSumVector,
                     polynomial: DensePolynomial, tol: float) -> RecoveryResult:
    approximation = roots_numeric(polynomial, tol=ROOT_TOLERANCE)
    targets = np.array([complex(float(t)) for t in S], dtype=np.complex128)
    return _verified_numeric(approximation, targets, s, p, tol)


def merge_clusters(roots: np.ndarray, radius: float) -> np.ndarray:
    """Replace each cluster of nearby roots by copies of its centroid.

    A root joins the first cluster whose seed lies within
    ``radius * max(1, |seed|)``. The centroid of a cluster around a multiple
    root is far more accurate than its members.
    """
    clusters: List[List[complex]] = []
    for z in sorted((complex(r) for r in roots),
                    key=lambda z: (z.real, z.imag)):
        for cluster in clusters:
            seed = cluster[0]
            if abs(z - seed) <= radius * max(1.0, abs(seed)):
                cluster.append(z)
                break
        else:
            clusters.append([z])

    merged = []
    for cluster in clusters:
        centroid = sum(cluster) / len(cluster)
        merged.extend([centroid] * len(cluster))
    return np.array(merged, dtype=np.complex128)


def _verified_numeric(approximation, targets: np.ndarray, s: int, p,
                      tol: float) -> RecoveryResult:
    raw = np.array(approximation.roots, dtype=np.complex128)
    # A triple root spreads like the cube root of the coefficient error
    candidates = [raw, merge_clusters(raw, tol**(1 / 3))]
    scored = [(match_residual(complex_s_sums(roots, s), targets), position)
              for position, roots in enumerate(candidates)]
    residual, position = min(scored)
    roots = candidates[position]

    if residual > tol:
        if not approximation.converged:
            raise RootFindingError(
                f"Durand-Kerner did not converge after {approximation.iterations} "
                f"sweeps and the best iterate misses the s-sums by {residual:.3e}",
                approximation)
        raise VerificationError(
            f"Recovered s-sums deviate by {residual:.3e}, above tolerance {tol}")

    if not approximation.converged:
        logging.warning(
            f"Durand-Kerner did not converge after {approximation.iterations} "
            f"sweeps; accepting the iterate, s-sums match within {residual:.3e}")
    elif position:
        logging.debug("Merged clustered roots before matching s-sums")

    ordered = tuple(sorted((complex(z) for z in roots),
                           key=lambda z: (z.real, z.imag)))
    return RecoveryResult(ordered, "numeric", residual, p)


def recover_power_sums_numeric(values: Sequence[complex], n: int,
                               s: int) -> Tuple[complex, ...]:
    """Double-precision p_1(A)..p_n(A) from s-sums that need not be rational."""
    _check_pair(n, s)
    values = np.asarray(values, dtype=np.complex128)
    if len(values) != comb(n, s):
        raise InvalidArgumentError(
            f"Expected C({n},{s}) = {comb(n, s)} s-sums, got {len(values)}")

    report = solvability(n, s)
    if not report.solvable:
        raise UnsolvableError(report)

    recovered: List[complex] = []
    for k in range(1, n + 1):
        q = q_polynomial(s, k, n)
        rest = sum((coefficient * prod(recovered[part - 1] for part in partition)
                    for partition, coefficient in q.tilde), 0j)
        recovered.append((power_sum_numeric(values, k) - rest) /
                         q.top_coefficient)
    return tuple(recovered)


def recover(S: Union[NumberMultiset, Sequence[complex]],
            n: int,
            s: int,
            mode: str = "auto",
            tol: float = 1e-6) -> RecoveryResult:
    """Rebuild A from S = A^(s).

    S may also be a sequence of complex numbers, which only numeric (or auto)
    mode accepts; power sums are then recovered in double precision.
    """
    if mode not in MODES:
        raise InvalidArgumentError(
            f"Unknown recovery mode {mode!r}, expected one of {MODES}")

    if not isinstance(S, NumberMultiset):
        if mode == "exact":
            raise InvalidArgumentError("Exact recovery needs rational s-sums")
        p = recover_power_sums_numeric(S, n, s)
        e = newton_p_to_e_numeric(p)
        # Lowest degree first: (-1)^n e_n, ..., -e_1, 1
        coefficients = [(-1)**(n - j) * e[n - j - 1] for j in range(n)] + [1]
        approximation = roots_of_coefficients(coefficients, ROOT_TOLERANCE)
        targets = np.asarray(S, dtype=np.complex128)
        return _verified_numeric(approximation, targets, s, p, tol)

    p = recover_power_sums(S, n, s)
    polynomial = characteristic_polynomial(p)

    if mode == "numeric":
        return _recover_numeric(S, s, p, polynomial, tol)
    if mode == "exact":
        return _recover_exact(S, s, p, polynomial)

    try:
        return _recover_exact(S, s, p, polynomial)
    except (IrrationalRootsError, EnumerationLimitError) as e:
        logging.warning(f"Exact recovery failed ({e}); falling back to numeric")
        return _recover_numeric(S, s, p, polynomial, tol)


