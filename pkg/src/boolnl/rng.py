"""Reproducible random Boolean functions from a splitmix64 stream."""

from __future__ import annotations

import numpy as np

from boolnl.bfcore import TruthTable

MASK64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)


def random_truth_table(n: int, gen: SplitMix64) -> TruthTable:
    """Draw ``2**n`` bits, most significant bit of each word first."""
    size = 1 << n
    words = [gen.next() for _ in range(max(1, size // 64))]
    raw = np.frombuffer(b"".join(w.to_bytes(8, "big") for w in words), dtype=np.uint8)
    return TruthTable(n, np.unpackbits(raw)[:size])


def random_functions(n: int, count: int, seed: int) -> list[TruthTable]:
    gen = SplitMix64(seed)
    return [random_truth_table(n, gen) for _ in range(count)]
