"""Multisets, power sums and symmetric-function checks."""

from fractions import Fraction
from math import prod

from moserpoly.errors import InvalidArgumentError
from moserpoly.moser import QPolynomial
from moserpoly.symfun.multiset import check_complement
from moserpoly.symfun.multiset import check_reflection
from moserpoly.symfun.multiset import elementary_symmetric
from moserpoly.symfun.multiset import elementary_symmetric_all
from moserpoly.symfun.multiset import newton_e_to_p
from moserpoly.symfun.multiset import newton_p_to_e
from moserpoly.symfun.multiset import NumberMultiset
from moserpoly.symfun.multiset import parse_multiset
from moserpoly.symfun.multiset import power_sums
from moserpoly.symfun.multiset import PowerSumVector
from moserpoly.symfun.multiset import s_sums
from moserpoly.symfun.multiset import translate
from moserpoly.symfun.multiset import translated_power_sum
from moserpoly.symfun.numeric import check_roots_of_unity_eulerian
from moserpoly.symfun.numeric import check_roots_of_unity_moser
from moserpoly.symfun.numeric import complex_s_sums
from moserpoly.symfun.numeric import esym_top_coefficient_check
from moserpoly.symfun.numeric import esym_top_coefficient_trials
from moserpoly.symfun.numeric import newton_p_to_e_numeric
from moserpoly.symfun.numeric import power_sum_numeric
from moserpoly.symfun.numeric import z_multiset
from moserpoly.symfun.series import series_lhs
from moserpoly.symfun.series import series_rhs
from moserpoly.symfun.series import SeriesTable


def apply_q(q: QPolynomial, p: PowerSumVector) -> Fraction:
    """sum_lam c_lam prod_i p_{lam_i}."""
    if len(p) < q.k:
        raise InvalidArgumentError(
            f"Q_(s,k,n) with k={q.k} needs p_1..p_{q.k}, only {len(p)} given")
    return sum((coefficient *
                prod((p.p(part) for part in partition), start=Fraction(1))
                for partition, coefficient in q), Fraction(0))
