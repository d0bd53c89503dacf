"""Per-purpose random streams derived from one 64-bit campaign seed.

Each ``(purpose, index)`` pair keys an independent Philox counter stream, so
adding draws for one purpose (say, mutation) never shifts another (shuffle).
"""

from __future__ import annotations

import zlib

import numpy as np

MASK64 = 2**64 - 1


class Streams:
    def __init__(self, seed: int):
        self.seed = int(seed) & MASK64

    def generator(self, purpose: str, *index: int) -> np.random.Generator:
        tag = zlib.crc32(purpose.encode("utf-8"))
        entropy = [self.seed & 0xFFFFFFFF, self.seed >> 32, tag, *(int(i) & MASK64 for i in index)]
        return np.random.Generator(np.random.Philox(np.random.SeedSequence(entropy)))

    def __repr__(self) -> str:
        return f"Streams(seed={self.seed})"
