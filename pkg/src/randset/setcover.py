"""Set-cover reducers over seed feature bitmaps.

Three reducers share one instance type:

* :func:`randomized_cover` shuffles the sets once and keeps every set that
  still hits an uncovered feature, in a single pass.
* :func:`greedy_cover` repeatedly takes the set covering the most uncovered
  features (lowest seed id on ties).
* :func:`exact_min_cover` enumerates subsets by size; only for tiny instances.

Every reducer returns a :class:`CoverResult` whose ``elapsed`` is wall-clock
seconds and whose ``work`` counts set examinations (a machine-independent cost).
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

import numpy as np

from randset.bitmap import Bitmap, FeatureBitmap, WidthMismatchError

EXACT_MAX_SETS = 20


class InfeasibleCoverError(ValueError):
    """The sets cannot cover the universe. ``residual`` holds what stays uncovered."""

    def __init__(self, residual: FeatureBitmap):
        super().__init__(f"{len(residual)} feature(s) cannot be covered: {sorted(residual)[:16]}")
        self.residual = residual


class CoverTooLargeError(ValueError):
    pass


@dataclass(frozen=True)
class CoverInstance:
    universe: FeatureBitmap
    sets: tuple[tuple[int, FeatureBitmap], ...]

    def __post_init__(self) -> None:
        sets = tuple((int(i), fs) for i, fs in self.sets)
        width = self.universe.width
        for seed_id, fs in sets:
            if fs.width != width:
                raise WidthMismatchError(f"set {seed_id} has width {fs.width}, universe {width}")
        if len({i for i, _ in sets}) != len(sets):
            raise ValueError("duplicate seed ids in cover instance")
        object.__setattr__(self, "sets", sets)

    def residual(self) -> FeatureBitmap:
        """Universe features no set covers (empty iff the instance is feasible)."""
        union = 0
        for _, fs in self.sets:
            union |= fs.bits
        return Bitmap(self.universe.width, self.universe.bits & ~union)

    def union_of(self, chosen: Sequence[int]) -> FeatureBitmap:
        lookup = dict(self.sets)
        bits = 0
        for seed_id in chosen:
            bits |= lookup[seed_id].bits
        return Bitmap(self.universe.width, bits)


@dataclass(frozen=True)
class CoverResult:
    chosen: tuple[int, ...]
    elapsed: float
    work: int = 0


def fisher_yates_order(n: int, rng: np.random.Generator) -> list[int]:
    """A uniformly random permutation of ``range(n)``.

    All swap indices are drawn in one batch up front, then applied in the
    usual descending Fisher-Yates sweep.
    """
    order = list(range(n))
    if n > 1:
        picks = rng.integers(0, np.arange(n, 1, -1)).tolist()
        for i, j in zip(range(n - 1, 0, -1), picks):
            order[i], order[j] = order[j], order[i]
    return order


def randomized_cover(instance: CoverInstance, rng: np.random.Generator) -> CoverResult:
    start = time.perf_counter()
    uncovered = instance.universe.bits
    sets = instance.sets
    chosen = []
    work = len(sets)  # shuffle
    if uncovered:
        for idx in fisher_yates_order(len(sets), rng):
            seed_id, fs = sets[idx]
            work += 1
            if fs.bits & uncovered:
                chosen.append(seed_id)
                uncovered &= ~fs.bits
                if not uncovered:
                    break
        if uncovered:
            raise InfeasibleCoverError(Bitmap(instance.universe.width, uncovered))
    return CoverResult(tuple(chosen), time.perf_counter() - start, work)


def greedy_cover(instance: CoverInstance) -> CoverResult:
    start = time.perf_counter()
    uncovered = instance.universe.bits
    sets = instance.sets
    chosen = []
    work = 0
    while uncovered:
        best_gain = 0
        best_id = -1
        best_bits = 0
        for seed_id, fs in sets:
            work += 1
            gain = (fs.bits & uncovered).bit_count()
            if gain > best_gain or (gain == best_gain and gain and seed_id < best_id):
                best_gain, best_id, best_bits = gain, seed_id, fs.bits
        if best_gain == 0:
            raise InfeasibleCoverError(Bitmap(instance.universe.width, uncovered))
        chosen.append(best_id)
        uncovered &= ~best_bits
    return CoverResult(tuple(chosen), time.perf_counter() - start, work)


def exact_min_cover(instance: CoverInstance) -> CoverResult:
    """Minimum-cardinality cover; the lexicographically smallest id list among ties."""
    if len(instance.sets) > EXACT_MAX_SETS:
        raise CoverTooLargeError(
            f"{len(instance.sets)} sets exceeds the exhaustive limit of {EXACT_MAX_SETS}"
        )
    start = time.perf_counter()
    target = instance.universe.bits
    if not target:
        return CoverResult((), time.perf_counter() - start, 0)
    residual = instance.residual()
    if residual:
        raise InfeasibleCoverError(residual)
    ordered = sorted((seed_id, fs.bits & target) for seed_id, fs in instance.sets)
    work = 0
    # combinations() over an id-sorted list yields id tuples in lexicographic order
    for k in range(1, len(ordered) + 1):
        for combo in combinations(ordered, k):
            work += 1
            bits = 0
            for _, b in combo:
                bits |= b
            if bits == target:
                return CoverResult(
                    tuple(seed_id for seed_id, _ in combo), time.perf_counter() - start, work
                )
    raise AssertionError("unreachable: feasible instance without a cover")
