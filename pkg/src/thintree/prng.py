"""Seedable, portable pseudo-random number generator.

This is PCG32 (O'Neill's permuted congruential generator, XSH-RR variant,
64-bit state, 32-bit output).  It is implemented here rather than taken from
``random`` so that generator output is identical across Python versions and
platforms; instance files produced from a (spec, seed) pair must be
bit-identical forever.
"""

_MASK64 = (1 << 64) - 1
_MULT = 6364136223846793005
_INC = 1442695040888963407


class PCG32:
    """PCG32 stream. ``seed`` may be any non-negative integer."""

    def __init__(self, seed: int):
        if seed < 0:
            raise ValueError("seed must be non-negative")
        self.state = 0
        self._step()
        self.state = (self.state + seed) & _MASK64
        self._step()

    def _step(self) -> None:
        self.state = (self.state * _MULT + _INC) & _MASK64

    def next_u32(self) -> int:
        old = self.state
        self._step()
        xorshifted = (((old >> 18) ^ old) >> 27) & 0xFFFFFFFF
        rot = old >> 59
        return ((xorshifted >> rot) | (xorshifted << ((-rot) & 31))) & 0xFFFFFFFF

    def randrange(self, n: int) -> int:
        """Uniform integer in [0, n) via rejection sampling (unbiased)."""
        if n <= 0:
            raise ValueError("n must be positive")
        threshold = (1 << 32) - ((1 << 32) % n)
        while True:
            r = self.next_u32()
            if r < threshold:
                return r % n

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi] inclusive."""
        return lo + self.randrange(hi - lo + 1)

    def shuffle(self, items: list) -> None:
        """Fisher-Yates, in place."""
        for i in range(len(items) - 1, 0, -1):
            j = self.randrange(i + 1)
            items[i], items[j] = items[j], items[i]
