"""Portable counter-based pseudorandom numbers (splitmix64).

Every draw is a pure function of (seed, counter), so generated instances
are reproducible across platforms and numpy versions.  A vectorized path
produces whole 64-bit word arrays for bulk G(n, p) sampling.
"""

from dataclasses import dataclass

import numpy as np

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15
MIX1 = 0xBF58476D1CE4E5B9
MIX2 = 0x94D049BB133111EB


def splitmix64(seed: int, counter: int) -> int:
    """The counter-th output of the splitmix64 stream with this seed."""
    z = (seed + (counter + 1) * GOLDEN) & MASK64
    z = ((z ^ (z >> 30)) * MIX1) & MASK64
    z = ((z ^ (z >> 27)) * MIX2) & MASK64
    return z ^ (z >> 31)


def splitmix64_array(seed: int, start: int, count: int) -> np.ndarray:
    """Vectorized splitmix64 outputs for counters start..start+count-1."""
    ctr = np.arange(start + 1, start + count + 1, dtype=np.uint64)
    with np.errstate(over="ignore"):
        z = np.uint64(seed & MASK64) + ctr * np.uint64(GOLDEN)
        z = (z ^ (z >> np.uint64(30))) * np.uint64(MIX1)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(MIX2)
        return z ^ (z >> np.uint64(31))


@dataclass
class CounterRng:
    """Stateful convenience wrapper around the pure splitmix64 stream."""

    seed: int
    counter: int = 0

    def next64(self) -> int:
        out = splitmix64(self.seed, self.counter)
        self.counter += 1
        return out

    def uniform(self) -> float:
        """Float in [0, 1) with 53 random bits."""
        return (self.next64() >> 11) * (2.0 ** -53)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound) by rejection."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = MASK64 - (MASK64 + 1) % bound
        while True:
            x = self.next64()
            if x <= limit:
                return x % bound

    def sample(self, seq, count: int):
        """count distinct elements of seq, order-deterministic."""
        pool = list(seq)
        if count > len(pool):
            raise ValueError("sample larger than population")
        out = []
        for _ in range(count):
            idx = self.below(len(pool))
            out.append(pool.pop(idx))
        return out

    def bernoulli_words(self, nbits: int, p: float) -> int:
        """Python int whose nbits low bits are independent Bernoulli(p).

        Built from vectorized 53-bit uniforms compared against p.
        """
        if not 0.0 <= p <= 1.0:
            raise ValueError("p must be in [0, 1]")
        if nbits <= 0:
            return 0
        words = splitmix64_array(self.seed, self.counter, nbits)
        self.counter += nbits
        hits = (words >> np.uint64(11)).astype(np.float64) * (2.0 ** -53) < p
        packed = np.packbits(hits, bitorder="little")
        return int.from_bytes(packed.tobytes(), "little")
