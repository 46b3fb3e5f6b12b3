"""Seeded 64-bit generator used by every randomized construction.

The recurrence is xorshift64* (shifts 12, 25, 27; output multiplier
0x2545F4914F6CDD1D).  The seed is first passed through one round of
splitmix64 so that small and zero seeds give well-mixed, nonzero states.
Everything is plain integer arithmetic masked to 64 bits, so a seed fixes the
output stream on every platform.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1


def _splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & MASK64
    return x ^ (x >> 31)


class XorShift64:
    def __init__(self, seed: int):
        self.state = _splitmix64(seed & MASK64) or 0x9E3779B97F4A7C15

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & MASK64
        x ^= x >> 27
        self.state = x
        return (x * 0x2545F4914F6CDD1D) & MASK64

    def below(self, k: int) -> int:
        """Uniform integer in ``[0, k)`` by rejection."""
        if k <= 0:
            raise ValueError("k must be positive")
        limit = MASK64 - (MASK64 + 1) % k
        while True:
            r = self.next_u64()
            if r <= limit:
                return r % k

    def choice(self, seq):
        return seq[self.below(len(seq))]

    def shuffled(self, seq) -> list:
        out = list(seq)
        for i in range(len(out) - 1, 0, -1):
            j = self.below(i + 1)
            out[i], out[j] = out[j], out[i]
        return out
