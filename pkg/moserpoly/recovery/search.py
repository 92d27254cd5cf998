"""Exhaustive search for distinct integer multisets with equal s-sums.

Translating A by z translates every s-sum by s*z, so multisets are searched
with their minimum shifted to 0 and grouped by their s-sums shifted the same
way. Two class representatives X, Y in a group share s-sums exactly after Y
moves by (min X^(s) - min Y^(s)) / s, when that is an integer. Pairs are
kept up to translation, with the smallest element of the pair at 0; the
size cap applies to these classes, and every kept class is reported with
all of its translates that stay inside [0, range_bound].
"""

from collections import defaultdict
from fractions import Fraction
from itertools import combinations
from itertools import combinations_with_replacement
import logging
from typing import Dict, List, Set, Tuple

from moserpoly.errors import InvalidArgumentError
from moserpoly.moser import moser_value
from moserpoly.symfun import NumberMultiset
from moserpoly.symfun import power_sums

MAX_SEARCH_SIZE = 8
MAX_RANGE_BOUND = 12

Elements = Tuple[int, ...]


def _integer_s_sums(elements: Elements, s: int) -> Elements:
    return tuple(sorted(sum(chosen) for chosen in combinations(elements, s)))


def _shift(elements: Elements, z: int) -> Elements:
    return tuple(a + z for a in elements)


def _classes(n: int, s: int,
             range_bound: int) -> Dict[Elements, List[Tuple[Elements, int]]]:
    """Min-0 multisets grouped by normalized s-sums, with their min s-sum."""
    groups = defaultdict(list)
    for tail in combinations_with_replacement(range(range_bound + 1), n - 1):
        elements = (0, ) + tail
        sums = _integer_s_sums(elements, s)
        low = sums[0]
        groups[_shift(sums, -low)].append((elements, low))
    return groups


def find_ambiguous_pairs(
        n: int, s: int, range_bound: int,
        size_cap: int) -> List[Tuple[NumberMultiset, NumberMultiset]]:
    """Unordered pairs of distinct multisets in [0, range_bound]^n with equal s-sums.

    Each pair is ordered (smaller, larger) by its sorted elements. The first
    ``size_cap`` translation classes, in that order, are expanded to every
    translate inside the range and the result is sorted.
    """
    if not 1 <= n <= MAX_SEARCH_SIZE:
        raise InvalidArgumentError(
            f"Search needs 1 <= n <= {MAX_SEARCH_SIZE}, got n={n}")
    if not 1 <= s <= n:
        raise InvalidArgumentError(f"Search needs 1 <= s <= n, got s={s}")
    if not 0 <= range_bound <= MAX_RANGE_BOUND:
        raise InvalidArgumentError(
            f"Search needs 0 <= range_bound <= {MAX_RANGE_BOUND}, got {range_bound}"
        )
    if size_cap < 0:
        raise InvalidArgumentError(f"size_cap must be >= 0, got {size_cap}")

    classes: Set[Tuple[Elements, Elements]] = set()
    for members in _classes(n, s, range_bound).values():
        for (x, low_x), (y, low_y) in combinations(members, 2):
            z, rest = divmod(low_x - low_y, s)
            if rest:
                continue
            moved = _shift(y, z)
            if moved == x:
                continue
            low = min(x[0], moved[0])
            first, second = sorted((_shift(x, -low), _shift(moved, -low)))
            if max(first[-1], second[-1]) <= range_bound:
                classes.add((first, second))

    kept = sorted(classes)[:size_cap]
    pairs = sorted((_shift(first, t), _shift(second, t))
                   for first, second in kept
                   for t in range(range_bound - max(first[-1], second[-1]) + 1))
    logging.debug(
        f"Found {len(classes)} ambiguous pair classes for n={n}, s={s}, "
        f"range {range_bound}; reporting {len(pairs)} pairs")
    return [(NumberMultiset(a), NumberMultiset(b)) for a, b in pairs]


def pair_consistency(A: NumberMultiset, B: NumberMultiset, s: int) -> bool:
    """The first k with p_k(A) != p_k(B) is one where F_{s,k}(n) vanishes.

    Below that index the recovery recursion cannot tell A from B; past it the
    power sums are free to differ even where F_{s,k}(n) != 0.
    """
    n = A.size
    if B.size != n:
        raise InvalidArgumentError("An ambiguous pair needs equal sizes")
    left = power_sums(A, n)
    right = power_sums(B, n)
    for k in range(1, n + 1):
        if left.p(k) != right.p(k):
            return moser_value(s, k, n) == Fraction(0)
    return False
