from math import sqrt
from typing import Callable, List

import numpy as np

from moserpoly.errors import UnsolvableError
from moserpoly.recovery import find_ambiguous_pairs
from moserpoly.recovery import match_residual
from moserpoly.recovery import pair_consistency
from moserpoly.recovery import recover
from moserpoly.recovery import solvability
from moserpoly.rng import SplitMix64
from moserpoly.symfun import complex_s_sums
from moserpoly.symfun import NumberMultiset
from moserpoly.symfun import s_sums

from .base import BaseSuite
from .base import PropertyResult

AMBIGUOUS_S_SUMS = NumberMultiset.of(5, 6, 7, 9, 10, 11)
SEARCH_RANGE = 6
SEARCH_CAP = 10**6


def _solvable_pairs(n_max: int):
    return [(n, s) for n in range(1, n_max + 1) for s in range(1, n + 1)
            if solvability(n, s).solvable]


class RecoverySuite(BaseSuite):
    """
    Round trips through the recovery algorithm and the ambiguity search.
    """

    suite_name = "recovery"

    def properties(self) -> List[Callable[[], PropertyResult]]:
        return [
            self.integer_round_trip,
            self.rational_round_trip,
            self.numeric_round_trip,
            self.repeated_numeric_round_trip,
            self.negative_instance,
            self.search_respects_solvability,
            self.ambiguous_pairs_consistent,
        ]

    def _rng(self, salt: int) -> SplitMix64:
        return SplitMix64((self.seed + salt * 0xBF58476D1CE4E5B9) % (1 << 64))

    def _round_trip(self, name: str, salt: int, max_denominator: int):
        rng = self._rng(salt)

        def cases():
            for n, s in _solvable_pairs(7):
                for _ in range(self.trials):
                    A = NumberMultiset(
                        tuple(rng.rationals(n, -9, 9, max_denominator)))
                    yield {"A": A, "s": s}

        def recovered(A, s):
            result = recover(s_sums(A, s), A.size, s, mode="exact")
            return result.multiset == A and result.residual == 0

        return self._check(name, cases(), recovered)

    def integer_round_trip(self) -> PropertyResult:
        return self._round_trip("integer_round_trip", 1, 1)

    def rational_round_trip(self) -> PropertyResult:
        return self._round_trip("rational_round_trip", 2, 4)

    def numeric_round_trip(self) -> PropertyResult:
        rng = self._rng(3)

        def cases():
            for n, s in _solvable_pairs(5):
                if n < 2:
                    continue
                for _ in range(min(self.trials, 5)):
                    root = sqrt(rng.randint(2, 3))
                    scale = rng.nonzero_int(-3, 3)
                    pool = list(range(-4, 5))
                    rest = [
                        pool.pop(rng.randint(0, len(pool) - 1))
                        for _ in range(n - 2)
                    ]
                    values = [scale * root, -scale * root] + rest
                    yield {"values": tuple(values), "s": s}

        def recovered(values, s):
            A = np.array(values, dtype=np.complex128)
            result = recover(complex_s_sums(A, s), len(A), s, mode="numeric")
            return match_residual(np.array(result.multiset), A) < 1e-6

        return self._check("numeric_round_trip", cases(), recovered)

    def repeated_numeric_round_trip(self) -> PropertyResult:
        rng = self._rng(4)

        def cases():
            for n, s in _solvable_pairs(5):
                if n < 3:
                    continue
                for _ in range(min(self.trials, 3)):
                    repeated = rng.randint(-3, 3)
                    multiplicity = rng.randint(2, 3)
                    pool = [v for v in range(-4, 5) if v != repeated]
                    rest = [
                        pool.pop(rng.randint(0, len(pool) - 1))
                        for _ in range(n - multiplicity)
                    ]
                    values = (repeated, ) * multiplicity + tuple(rest)
                    for source in ("rational", "complex"):
                        yield {"values": values, "s": s, "source": source}

        def recovered(values, s, source):
            A = np.array(values, dtype=np.complex128)
            if source == "rational":
                S = s_sums(NumberMultiset(values), s)
            else:
                S = complex_s_sums(A, s)
            result = recover(S, len(A), s, mode="numeric")
            return match_residual(np.array(result.multiset), A) < 1e-6

        return self._check("repeated_numeric_round_trip", cases(), recovered)

    def negative_instance(self) -> PropertyResult:

        def refused(S, n, s):
            try:
                recover(S, n, s, mode="exact")
            except UnsolvableError as e:
                return e.report.vanishing_k == (3, )
            return False

        def witnessed(S, n, s):
            first = NumberMultiset.of(1, 4, 5, 6)
            second = NumberMultiset.of(2, 3, 4, 7)
            pairs = find_ambiguous_pairs(n, s, 7, 10)
            return (first, second) in pairs and s_sums(first, s) == S

        def refused_and_witnessed(S, n, s):
            return refused(S, n, s) and witnessed(S, n, s)

        return self._check("negative_instance", [{
            "S": AMBIGUOUS_S_SUMS,
            "n": 4,
            "s": 2
        }], refused_and_witnessed)

    def search_respects_solvability(self) -> PropertyResult:
        return self._check(
            "search_respects_solvability",
            ({"n": n, "s": s} for n, s in _solvable_pairs(6)),
            lambda n, s: not find_ambiguous_pairs(n, s, SEARCH_RANGE, 1))

    def ambiguous_pairs_consistent(self) -> PropertyResult:

        def cases():
            for n in range(1, 7):
                for s in range(1, n + 1):
                    if solvability(n, s).solvable:
                        continue
                    for A, B in find_ambiguous_pairs(n, s, SEARCH_RANGE,
                                                     SEARCH_CAP):
                        yield {"A": A, "B": B, "s": s}

        def consistent(A, B, s):
            return s_sums(A, s) == s_sums(B, s) and pair_consistency(A, B, s)

        return self._check("ambiguous_pairs_consistent", cases(), consistent)
