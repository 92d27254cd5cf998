"""Number multisets, power sums, elementary symmetric polynomials.

``s_sums`` is the single brute-force source of truth for A^(s); everything
the formula side computes is checked against it.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
import json
import logging
from math import comb
from typing import List, Optional, Sequence, Tuple

from moserpoly.combinatorics import binomial
from moserpoly.combinatorics import format_rational
from moserpoly.combinatorics import RationalLike
from moserpoly.combinatorics import to_rational
from moserpoly.errors import EnumerationLimitError
from moserpoly.errors import InvalidArgumentError
from moserpoly.errors import MultisetSizeError

MAX_S_SUMS = 2_000_000


@dataclass(frozen=True)
class NumberMultiset:
    """Unordered collection of exact rationals, stored sorted."""

    elements: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(
            self, "elements",
            tuple(sorted(to_rational(a) for a in self.elements)))

    @classmethod
    def of(cls, *elements: RationalLike) -> "NumberMultiset":
        return cls(tuple(elements))

    @property
    def size(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __neg__(self) -> "NumberMultiset":
        return NumberMultiset(tuple(-a for a in self.elements))

    def to_strings(self) -> List[str]:
        return [format_rational(a) for a in self.elements]

    def __str__(self):
        return "{" + ", ".join(self.to_strings()) + "}"


@dataclass(frozen=True)
class PowerSumVector:
    """p_1..p_m of some multiset; ``source_size`` is n when known."""

    values: Tuple[Fraction, ...]
    source_size: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "values",
                           tuple(to_rational(v) for v in self.values))

    def __len__(self):
        return len(self.values)

    def p(self, k: int) -> Fraction:
        """p_k, with p_0 = n."""
        if k == 0:
            if self.source_size is None:
                raise InvalidArgumentError(
                    "p_0 needs the size of the source multiset")
            return Fraction(self.source_size)
        if not 1 <= k <= len(self.values):
            raise InvalidArgumentError(
                f"p_{k} is outside the available range 1..{len(self.values)}")
        return self.values[k - 1]

    def to_strings(self) -> List[str]:
        return [format_rational(v) for v in self.values]


def parse_multiset(text: str) -> NumberMultiset:
    """Parse a JSON array or newline-delimited text of integers / "num/den"."""
    stripped = text.strip()
    if not stripped:
        return NumberMultiset(())

    if stripped.startswith("["):
        try:
            entries = json.loads(stripped)
        except json.JSONDecodeError as e:
            raise InvalidArgumentError(f"Invalid JSON multiset: {e}")
        if not isinstance(entries, list):
            raise InvalidArgumentError("A JSON multiset must be an array")
        for entry in entries:
            if not isinstance(entry, (int, str)) or isinstance(entry, bool):
                raise InvalidArgumentError(
                    f"Multiset entries must be integers or strings, got {entry!r}"
                )
    else:
        entries = [
            line.strip() for line in stripped.splitlines() if line.strip()
        ]

    return NumberMultiset(tuple(to_rational(e) for e in entries))


def power_sums(A: NumberMultiset, upto: int) -> PowerSumVector:
    """p_1(A)..p_upto(A)."""
    if upto < 1:
        raise InvalidArgumentError(f"power_sums needs upto >= 1, got {upto}")
    values = []
    powers = [Fraction(1)] * A.size
    for _ in range(upto):
        powers = [p * a for p, a in zip(powers, A.elements)]
        values.append(sum(powers, Fraction(0)))
    return PowerSumVector(tuple(values), A.size)


def s_sums(A: NumberMultiset, s: int) -> NumberMultiset:
    """A^(s): every sum over s distinct indices, C(n, s) elements."""
    n = A.size
    if s < 1:
        raise InvalidArgumentError(f"s_sums needs s >= 1, got {s}")
    if s > n:
        raise MultisetSizeError(f"s = {s} exceeds the multiset size n = {n}")
    count = comb(n, s)
    if count > MAX_S_SUMS:
        raise EnumerationLimitError(
            f"C({n},{s}) = {count} s-sums exceed the cap of {MAX_S_SUMS}")

    logging.debug(f"Enumerating {count} {s}-sums of a {n}-multiset")
    return NumberMultiset(
        tuple(
            sum(chosen, Fraction(0))
            for chosen in combinations(A.elements, s)))


def elementary_symmetric_all(A: NumberMultiset) -> List[Fraction]:
    """e_0..e_n as the coefficients of prod(1 + a t)."""
    e = [Fraction(1)] + [Fraction(0)] * A.size
    for i, a in enumerate(A.elements, start=1):
        for j in range(i, 0, -1):
            e[j] += a * e[j - 1]
    return e


def elementary_symmetric(A: NumberMultiset, k: int) -> Fraction:
    """e_k(A) for 0 <= k <= n."""
    if k < 0 or k > A.size:
        raise InvalidArgumentError(
            f"e_{k} is undefined for a multiset of size {A.size}")
    return elementary_symmetric_all(A)[k]


def _values(p) -> Tuple[Fraction, ...]:
    if isinstance(p, PowerSumVector):
        return p.values
    return tuple(to_rational(v) for v in p)


def newton_p_to_e(p) -> List[Fraction]:
    """e_1..e_m from p_1..p_m via k e_k = sum_i (-1)^(i-1) e_{k-i} p_i."""
    values = _values(p)
    if not values:
        raise InvalidArgumentError("newton_p_to_e needs at least p_1")
    e = [Fraction(1)]
    for k in range(1, len(values) + 1):
        total = sum(((-1)**(i - 1) * e[k - i] * values[i - 1]
                     for i in range(1, k + 1)), Fraction(0))
        e.append(total / k)
    return e[1:]


def newton_e_to_p(e: Sequence[RationalLike],
                  source_size: Optional[int] = None) -> PowerSumVector:
    """p_1..p_m from e_1..e_m; the inverse of ``newton_p_to_e``."""
    es = [Fraction(1)] + [to_rational(v) for v in e]
    p: List[Fraction] = []
    for k in range(1, len(es)):
        lower = sum(((-1)**(i - 1) * es[k - i] * p[i - 1]
                     for i in range(1, k)), Fraction(0))
        p.append((-1)**(k - 1) * (k * es[k] - lower))
    return PowerSumVector(tuple(p), source_size)


def translate(A: NumberMultiset, z: RationalLike) -> NumberMultiset:
    """T_z(A) = {a + z}."""
    z = to_rational(z)
    return NumberMultiset(tuple(a + z for a in A.elements))


def translated_power_sum(p: PowerSumVector, z: RationalLike, k: int) -> Fraction:
    """p_k(T_z(A)) = sum_i C(k, i) p_{k-i}(A) z^i, with p_0 = n."""
    if k > len(p):
        raise InvalidArgumentError(
            f"translated_power_sum needs p_1..p_{k}, only {len(p)} given")
    z = to_rational(z)
    return sum((binomial(k, i) * p.p(k - i) * z**i for i in range(k + 1)),
               Fraction(0))


def check_reflection(A: NumberMultiset, s: int, k: int) -> bool:
    """(-A)^(s) = -(A^(s)) and p_k(-A) = (-1)^k p_k(A)."""
    sums_match = s_sums(-A, s) == -s_sums(A, s)
    powers_match = (power_sums(-A, k).p(k) == (-1)**k * power_sums(A, k).p(k))
    return sums_match and powers_match


def check_complement(A: NumberMultiset, s: int) -> bool:
    """A^(n-s) = {p_1(A) - t : t in A^(s)} for 1 <= s < n."""
    n = A.size
    if not 1 <= s < n:
        raise InvalidArgumentError(f"Complement needs 1 <= s < n, got s={s}")
    total = sum(A.elements, Fraction(0))
    mirrored = NumberMultiset(tuple(total - t for t in s_sums(A, s)))
    return s_sums(A, n - s) == mirrored

