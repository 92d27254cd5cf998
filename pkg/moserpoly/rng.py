"""SplitMix64, the seeded generator behind every randomized suite.

Each step is

    state = (state + 0x9E3779B97F4A7C15) mod 2^64
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 mod 2^64
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB mod 2^64
    out = z ^ (z >> 31)

and a bounded integer in [lo, hi] is ``out mod (hi - lo + 1) + lo``. The
modulo bias is accepted; it keeps the stream reproducible from the equations
alone.
"""

from fractions import Fraction
from typing import List

from moserpoly.errors import InvalidArgumentError

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:

    def __init__(self, seed: int = 0):
        if not 0 <= seed <= MASK64:
            raise InvalidArgumentError(
                f"Seed must be an unsigned 64-bit integer, got {seed}")
        self.state = seed

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def randint(self, lo: int, hi: int) -> int:
        """Integer in [lo, hi], both ends included."""
        if hi < lo:
            raise InvalidArgumentError(f"Empty range [{lo}, {hi}]")
        return self.next_u64() % (hi - lo + 1) + lo

    def nonzero_int(self, lo: int, hi: int) -> int:
        while True:
            value = self.randint(lo, hi)
            if value:
                return value

    def rational(self, lo: int, hi: int, max_denominator: int) -> Fraction:
        """num/den with den in [1, max_denominator] and num/den in [lo, hi]."""
        den = self.randint(1, max_denominator)
        return Fraction(self.randint(lo * den, hi * den), den)

    def integers(self, count: int, lo: int, hi: int) -> List[int]:
        return [self.randint(lo, hi) for _ in range(count)]

    def rationals(self, count: int, lo: int, hi: int,
                  max_denominator: int) -> List[Fraction]:
        return [
            self.rational(lo, hi, max_denominator) for _ in range(count)
        ]
