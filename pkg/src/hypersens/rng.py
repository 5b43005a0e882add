"""Deterministic 64-bit PRNG used by every randomized experiment.

The generator is splitmix64 (Steele, Lea, Flood 2014), chosen because its
whole state is one 64-bit word and the update is trivial to re-implement,
so seeded streams are portable across languages and releases:

    state  = (state + 0x9E3779B97F4A7C15) mod 2^64
    z      = state
    z      = ((z XOR (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2^64
    z      = ((z XOR (z >> 27)) * 0x94D049BB133111EB) mod 2^64
    output = z XOR (z >> 31)

Derived draws are fixed too:

  * below(n): floor(next_u64() * n / 2^64)  (one word per draw)
  * bits(n):  n bits assembled from ceil(n/64) words, word w supplying
              bits 64*w .. 64*w+63, least significant bit first
  * permutation(n): Fisher-Yates, i from n-1 down to 1, j = below(i+1)
"""

import math

MASK64 = (1 << 64) - 1


class SplitMix64:
    """splitmix64 stream with the derived draws documented above."""

    __slots__ = ("state",)

    def __init__(self, seed: int = 0):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform-ish integer in [0, n) from a single 64-bit word."""
        if n <= 0:
            raise ValueError("n must be positive")
        return (self.next_u64() * n) >> 64

    def bits(self, n: int) -> int:
        """n random bits as an integer, bit 0 drawn first."""
        if n < 0:
            raise ValueError("n must be nonnegative")
        out = 0
        for w in range(math.ceil(n / 64)):
            out |= self.next_u64() << (64 * w)
        return out & ((1 << n) - 1)

    def permutation(self, n: int) -> list[int]:
        perm = list(range(n))
        for i in range(n - 1, 0, -1):
            j = self.below(i + 1)
            perm[i], perm[j] = perm[j], perm[i]
        return perm
