"""Double-precision checks: roots of unity and the e_k top-coefficient test."""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
import logging
from typing import List, Optional, Sequence

import numpy as np

from moserpoly.combinatorics import eulerian
from moserpoly.errors import InvalidArgumentError
from moserpoly.moser import moser_value
from moserpoly.polynomials import DensePolynomial
from moserpoly.polynomials import roots_numeric
from moserpoly.rng import SplitMix64
from moserpoly.symfun.multiset import newton_p_to_e

DEFAULT_TOLERANCE = 1e-6
REDRAWS = 3
# Closer roots than this make the e_k comparison meaningless
MIN_ROOT_GAP = 1e-5


def z_multiset(n: int, k: int) -> np.ndarray:
    """Z_{n,k}: the k-th roots of unity followed by n - k zeros."""
    if not 1 <= k <= n:
        raise InvalidArgumentError(f"Z_(n,k) needs 1 <= k <= n, got n={n}, k={k}")
    roots = np.exp(2j * np.pi * np.arange(k) / k)
    return np.concatenate([roots, np.zeros(n - k, dtype=np.complex128)])


def complex_s_sums(values: Sequence[complex], s: int) -> np.ndarray:
    """A^(s) for complex A, in combination order."""
    values = np.asarray(values, dtype=np.complex128)
    if not 1 <= s <= len(values):
        raise InvalidArgumentError(
            f"s = {s} is outside 1..{len(values)} for complex s-sums")
    index = np.array(list(combinations(range(len(values)), s)), dtype=np.intp)
    return values[index].sum(axis=1)


def power_sum_numeric(values: Sequence[complex], k: int) -> complex:
    return complex(np.sum(np.asarray(values, dtype=np.complex128)**k))


def elementary_symmetric_numeric(values: Sequence[complex], k: int) -> complex:
    """e_k of complex values read off prod(x - v); zero when k > len(values)."""
    values = np.asarray(values, dtype=np.complex128)
    if k > len(values):
        return 0j
    if k == 0:
        return 1 + 0j
    return complex((-1)**k * np.poly(values)[k])


def check_roots_of_unity_moser(s: int,
                               k: int,
                               n: int,
                               tol: float = DEFAULT_TOLERANCE) -> bool:
    """p_k(Z_{n,k}^(s)) / k matches F_{s,k}(n)."""
    if not (1 <= k <= n and 1 <= s <= n):
        raise InvalidArgumentError(
            f"Roots-of-unity check needs k <= n and s <= n, "
            f"got s={s}, k={k}, n={n}")
    measured = power_sum_numeric(complex_s_sums(z_multiset(n, k), s), k) / k
    expected = float(moser_value(s, k, n))
    return abs(measured - expected) < tol


def roots_of_unity_eulerian(k: int, s: int) -> complex:
    """(-1)^(s-1) p_k(Z_{k,k}^(s)) / k, which approximates <k-1, s-1>."""
    if not 1 <= s <= k:
        raise InvalidArgumentError(f"Needs 1 <= s <= k, got s={s}, k={k}")
    sums = complex_s_sums(z_multiset(k, k), s)
    return (-1)**(s - 1) * power_sum_numeric(sums, k) / k


def check_roots_of_unity_eulerian(k: int, s: int,
                                  tol: float = DEFAULT_TOLERANCE) -> bool:
    return abs(roots_of_unity_eulerian(k, s) - eulerian(k - 1, s - 1)) < tol


@dataclass(frozen=True)
class TopCoefficientTrial:
    """One pair of multisets sharing e_1..e_{k-1}.

    ``differences`` holds e_k(A^(s)) - M_{s,k,n} e_k(A) for both members;
    ``error`` names a root-finding failure when no usable pair was drawn.
    """

    power_sums: tuple
    differences: Optional[tuple]
    passed: bool
    error: Optional[str] = None


def _realize(power_sums: Sequence[Fraction]) -> Optional[np.ndarray]:
    """Complex multiset with the given p_1..p_n, or None if ill-conditioned."""
    e = newton_p_to_e(power_sums)
    n = len(e)
    # x^n - e_1 x^(n-1) + e_2 x^(n-2) - ...
    coefficients = [(-1)**(n - j) * e[n - j - 1] for j in range(n)] + [1]
    approximation = roots_numeric(DensePolynomial.monomial(coefficients))
    if not approximation.converged:
        return None
    roots = np.array(approximation.roots, dtype=np.complex128)
    if n > 1:
        gaps = np.abs(roots[:, None] - roots[None, :])
        np.fill_diagonal(gaps, np.inf)
        if float(gaps.min()) < MIN_ROOT_GAP:
            return None
    return roots


def _top_difference(roots: np.ndarray, s: int, k: int, top: float) -> complex:
    sums = complex_s_sums(roots, s)
    return (elementary_symmetric_numeric(sums, k) -
            top * elementary_symmetric_numeric(roots, k))


def esym_top_coefficient_trials(s: int,
                                k: int,
                                n: int,
                                trials: int,
                                seed: int = 0,
                                tol: float = DEFAULT_TOLERANCE
                                ) -> List[TopCoefficientTrial]:
    """Draw ``trials`` pairs A, B with equal e_1..e_{k-1} and distinct e_k.

    Shared p_1..p_{k-1} and p_{k+1}..p_n with two different p_k pin that
    down; the roots of the matching monic polynomials realize A and B.
    """
    if not (1 <= k <= n and 1 <= s <= n):
        raise InvalidArgumentError(
            f"Top coefficient check needs k <= n and s <= n, got s={s}, k={k}, n={n}"
        )
    top = float(moser_value(s, k, n))
    rng = SplitMix64(seed)
    outcomes = []

    for trial in range(trials):
        outcome = None
        for attempt in range(REDRAWS + 1):
            shared = [Fraction(rng.nonzero_int(-4, 4)) for _ in range(n)]
            first = Fraction(rng.nonzero_int(-4, 4))
            second = first
            while second == first:
                second = Fraction(rng.nonzero_int(-4, 4))
            p_a = shared[:k - 1] + [first] + shared[k:]
            p_b = shared[:k - 1] + [second] + shared[k:]

            roots_a = _realize(p_a)
            roots_b = _realize(p_b)
            if roots_a is None or roots_b is None:
                logging.warning(
                    f"Trial {trial}: root finding failed on attempt {attempt + 1}, redrawing"
                )
                continue

            d_a = _top_difference(roots_a, s, k, top)
            d_b = _top_difference(roots_b, s, k, top)
            scale = max(1.0, abs(d_a), abs(d_b))
            outcome = TopCoefficientTrial(
                power_sums=(tuple(p_a), tuple(p_b)),
                differences=(d_a, d_b),
                passed=abs(d_a - d_b) <= tol * scale)
            break

        if outcome is None:
            outcome = TopCoefficientTrial(
                power_sums=(),
                differences=None,
                passed=False,
                error=f"no well-conditioned pair after {REDRAWS + 1} draws")
        outcomes.append(outcome)

    return outcomes


def esym_top_coefficient_check(s: int,
                               k: int,
                               n: int,
                               trials: int,
                               seed: int = 0,
                               tol: float = DEFAULT_TOLERANCE) -> bool:
    """e_k(A^(s)) - M_{s,k,n} e_k(A) depends on e_1..e_{k-1} only."""
    return all(trial.passed for trial in esym_top_coefficient_trials(
        s, k, n, trials, seed, tol))


def newton_p_to_e_numeric(p: Sequence[complex]) -> np.ndarray:
    """Complex e_1..e_m from p_1..p_m, the recurrence of ``newton_p_to_e``."""
    e = [1 + 0j]
    for k in range(1, len(p) + 1):
        e.append(sum((-1)**(i - 1) * e[k - i] * p[i - 1]
                     for i in range(1, k + 1)) / k)
    return np.array(e[1:], dtype=np.complex128)
