"""Stacked byte-level mutations, a small havoc stand-in."""

from __future__ import annotations

import numpy as np

OPS = ("bit_flip", "byte_set", "byte_insert", "byte_delete", "chunk_duplicate")
MAX_STACK = 8


def max_child_length(parent_len: int) -> int:
    return 4 * parent_len + 16


def mutate_logged(parent: bytes, rng: np.random.Generator) -> tuple[bytes, list[str]]:
    """Mutate ``parent`` and also return the names of the applied operations."""
    data = bytearray(parent)
    limit = max_child_length(len(parent))
    applied = []
    for _ in range(int(rng.integers(1, MAX_STACK + 1))):
        op = OPS[int(rng.integers(len(OPS)))]
        n = len(data)
        if op == "bit_flip":
            if n:
                pos = int(rng.integers(n))
                data[pos] ^= 1 << int(rng.integers(8))
        elif op == "byte_set":
            if n:
                data[int(rng.integers(n))] = int(rng.integers(256))
        elif op == "byte_insert":
            if n < limit:
                data.insert(int(rng.integers(n + 1)), int(rng.integers(256)))
        elif op == "byte_delete":
            if n:
                del data[int(rng.integers(n))]
        else:
            if n:
                start = int(rng.integers(n))
                size = int(rng.integers(1, n - start + 1))
                at = int(rng.integers(n + 1))
                data[at:at] = data[start : start + size]
                del data[limit:]
        applied.append(op)
    return bytes(data), applied


def mutate(parent: bytes, rng: np.random.Generator) -> bytes:
    """Apply 1-8 random operations; the child is at most ``4 * len(parent) + 16`` bytes."""
    return mutate_logged(parent, rng)[0]
