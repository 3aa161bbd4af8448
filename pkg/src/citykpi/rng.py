"""Deterministic PRNG used everywhere randomness is needed.

splitmix64 is fully specified by its 64-bit integer arithmetic, so shuffles
and weight initializations are bit-identical across platforms and runs.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """splitmix64 stream over a 64-bit state."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return (z ^ (z >> 31)) & _MASK64

    def next_float(self) -> float:
        """Uniform double in [0, 1) using the top 53 bits."""
        return (self.next_u64() >> 11) * 2.0 ** -53

    def next_uniform(self, low: float, high: float) -> float:
        return low + (high - low) * self.next_float()


def fisher_yates(n: int, seed: int) -> list[int]:
    """Shuffle of range(n): swap index j = next_u64 mod (i+1), i from n-1 down to 1."""
    rng = SplitMix64(seed)
    idx = list(range(n))
    for i in range(n - 1, 0, -1):
        j = rng.next_u64() % (i + 1)
        idx[i], idx[j] = idx[j], idx[i]
    return idx
