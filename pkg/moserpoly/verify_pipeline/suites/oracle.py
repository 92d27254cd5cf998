from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterator, List

from moserpoly.moser import q_polynomial
from moserpoly.rng import SplitMix64
from moserpoly.symfun import apply_q
from moserpoly.symfun import check_complement
from moserpoly.symfun import check_reflection
from moserpoly.symfun import check_roots_of_unity_eulerian
from moserpoly.symfun import check_roots_of_unity_moser
from moserpoly.symfun import elementary_symmetric_all
from moserpoly.symfun import esym_top_coefficient_check
from moserpoly.symfun import newton_e_to_p
from moserpoly.symfun import newton_p_to_e
from moserpoly.symfun import NumberMultiset
from moserpoly.symfun import power_sums
from moserpoly.symfun import s_sums
from moserpoly.symfun import series_lhs
from moserpoly.symfun import series_rhs
from moserpoly.symfun import translate
from moserpoly.symfun import translated_power_sum

from .base import BaseSuite
from .base import PropertyResult

# (s, k, n) triples for the numeric e_k check
TOP_COEFFICIENT_CASES = [(1, 3, 4), (2, 2, 4), (2, 3, 5), (3, 3, 5)]


@lru_cache(maxsize=None)
def _cached_q(s: int, k: int, n: int):
    return q_polynomial(s, k, n)


class OracleSuite(BaseSuite):
    """
    Randomized checks of the formula side against brute force: the power-sum
    expansion, the generating-function tables, Newton's identities and the
    roots-of-unity witnesses.
    """

    suite_name = "oracle"

    def properties(self) -> List[Callable[[], PropertyResult]]:
        return [
            self.central_decomposition,
            self.series_tables,
            self.newton_round_trip,
            self.newton_matches_expansion,
            self.translation,
            self.reflection,
            self.complement,
            self.determination,
            self.roots_of_unity,
            self.roots_of_unity_moser,
            self.top_coefficient,
        ]

    def _rng(self, salt: int) -> SplitMix64:
        # One independent stream per property, whatever runs before it
        return SplitMix64((self.seed + salt * 0x9E3779B97F4A7C15) %
                          (1 << 64))

    def _rational_multisets(self, rng: SplitMix64, n: int, lo: int, hi: int,
                            max_denominator: int) -> Iterator[NumberMultiset]:
        for _ in range(self.trials):
            yield NumberMultiset(
                tuple(rng.rationals(n, lo, hi, max_denominator)))

    def central_decomposition(self) -> PropertyResult:
        rng = self._rng(1)

        def cases():
            for n in range(1, 8):
                for A in self._rational_multisets(rng, n, -5, 5, 4):
                    for s in range(1, n + 1):
                        for k in range(1, min(n, 6) + 1):
                            yield {"A": A, "s": s, "k": k}

        def expands(A, s, k):
            q = _cached_q(s, k, A.size)
            brute = power_sums(s_sums(A, s), k).p(k)
            return apply_q(q, power_sums(A, k)) == brute

        return self._check("central_decomposition", cases(), expands)

    def series_tables(self) -> PropertyResult:
        rng = self._rng(2)

        def cases():
            for trial in range(self.trials):
                n = rng.randint(1, 5)
                yield {"A": NumberMultiset(tuple(rng.integers(n, -3, 3)))}

        return self._check(
            "series_tables", cases(),
            lambda A: series_lhs(A, 6, 6) == series_rhs(A, 6, 6))

    def newton_round_trip(self) -> PropertyResult:
        rng = self._rng(3)

        def cases():
            for _ in range(self.trials):
                length = rng.randint(1, 10)
                yield {"e": tuple(rng.rationals(length, -6, 6, 5))}

        return self._check(
            "newton_round_trip", cases(),
            lambda e: tuple(newton_p_to_e(newton_e_to_p(e))) == e)

    def newton_matches_expansion(self) -> PropertyResult:
        rng = self._rng(4)

        def cases():
            for n in range(1, 8):
                for A in self._rational_multisets(rng, n, -4, 4, 3):
                    yield {"A": A}

        return self._check(
            "newton_matches_expansion", cases(), lambda A: newton_p_to_e(
                power_sums(A, A.size)) == elementary_symmetric_all(A)[1:])

    def translation(self) -> PropertyResult:
        rng = self._rng(5)

        def cases():
            for n in range(1, 6):
                for A in self._rational_multisets(rng, n, -5, 5, 3):
                    yield {"A": A, "z": rng.rational(-3, 3, 4),
                           "k": rng.randint(1, 6)}

        return self._check(
            "translation", cases(),
            lambda A, z, k: translated_power_sum(power_sums(A, k), z, k) ==
            power_sums(translate(A, z), k).p(k))

    def reflection(self) -> PropertyResult:
        rng = self._rng(6)

        def cases():
            for n in range(1, 7):
                for A in self._rational_multisets(rng, n, -5, 5, 3):
                    yield {"A": A, "s": rng.randint(1, n),
                           "k": rng.randint(1, 6)}

        return self._check("reflection", cases(), check_reflection)

    def complement(self) -> PropertyResult:
        rng = self._rng(7)

        def cases():
            for n in range(2, 8):
                for A in self._rational_multisets(rng, n, -5, 5, 3):
                    yield {"A": A, "s": rng.randint(1, n - 1)}

        return self._check("complement", cases(), check_complement)

    def determination(self) -> PropertyResult:
        rng = self._rng(8)

        def cases():
            for n in range(1, 8):
                for _ in range(self.trials):
                    A = NumberMultiset(tuple(rng.integers(n, -3, 3)))
                    B = NumberMultiset(tuple(rng.integers(n, -3, 3)))
                    yield {"A": A, "B": B}

        def determined(A, B):
            same_sums = power_sums(A, A.size) == power_sums(B, B.size)
            return same_sums == (A == B)

        return self._check("determination", cases(), determined)

    def roots_of_unity(self) -> PropertyResult:
        return self._check("roots_of_unity",
                           ({"k": k, "s": s}
                            for k in range(1, 9) for s in range(1, k + 1)),
                           check_roots_of_unity_eulerian)

    def roots_of_unity_moser(self) -> PropertyResult:
        return self._check("roots_of_unity_moser",
                           ({"s": s, "k": k, "n": n} for n in range(1, 9)
                            for k in range(1, n + 1) for s in range(1, n + 1)),
                           check_roots_of_unity_moser)

    def top_coefficient(self) -> PropertyResult:
        trials = min(self.trials, 5)
        return self._check(
            "top_coefficient",
            ({"s": s, "k": k, "n": n, "trials": trials, "seed": self.seed}
             for s, k, n in TOP_COEFFICIENT_CASES),
            esym_top_coefficient_check)
