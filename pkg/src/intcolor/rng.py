"""SplitMix64, the one PRNG used everywhere randomness is needed.

Chosen because it is tiny and trivially portable: the reference algorithm
(Steele, Lea & Flood 2014) is a handful of 64-bit adds, shifts and
multiplies, so corpora generated here can be reproduced in any language.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int) -> None:
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def next_float(self) -> float:
        """Uniform in [0, 1) from the top 53 bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def next_below(self, bound: int) -> int:
        """Integer in ``[0, bound)`` by plain modulo (bias is negligible for small bounds)."""
        return self.next_u64() % bound
