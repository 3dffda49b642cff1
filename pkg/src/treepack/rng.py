"""Portable 64-bit linear congruential generator.

    state <- (6364136223846793005 * state + 1442695040888963407) mod 2**64
    output = state >> 32                     (upper 32 bits)

The initial state is ``seed mod 2**64``; each output advances the state once
before it is read. ``below(m)`` is ``output mod m`` (m <= 2**32). These
constants are fixed so that generated instances can be reproduced by any
implementation.
"""

from __future__ import annotations

MULTIPLIER = 6364136223846793005
INCREMENT = 1442695040888963407
_MASK = (1 << 64) - 1


class Lcg64:
    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next32(self) -> int:
        self.state = (MULTIPLIER * self.state + INCREMENT) & _MASK
        return self.state >> 32

    def below(self, m: int) -> int:
        if not 0 < m <= 1 << 32:
            raise ValueError("modulus must be in [1, 2**32]")
        return self.next32() % m
