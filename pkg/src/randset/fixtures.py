"""Hand-built targets and corpora with known cover structure.

Several fixtures use a *dead* child: a branch whose first threshold is 0,
so ``bisect_right`` never returns bucket 0 and that child is unreachable.
Its parent stays a frontier node forever, which keeps a saturated campaign
(no reachable edge left to find) from having an empty frontier.
"""

from __future__ import annotations

import numpy as np

from randset.bitmap import Bitmap
from randset.cfg import Cfg
from randset.setcover import CoverInstance

LOW = 0x10
HIGH = 0xF0


def chain_cfg(n: int = 3) -> Cfg:
    return Cfg(n, tuple((i, i + 1) for i in range(n - 1)))


def diamond_cfg(stages: int, dead_children: bool = True) -> Cfg:
    """``stages`` binary diamonds in sequence.

    Stage node ``s`` picks its low arm for bytes < 128 and its high arm
    otherwise; both arms rejoin at the next stage. With ``dead_children``
    each stage node also owns an unreachable child.
    """
    per = 4 if dead_children else 3
    exit_node = stages * per
    edges = []
    branches = {}
    for i in range(stages):
        s = i * per
        low, high = s + 1, s + 2
        nxt = exit_node if i == stages - 1 else s + per
        if dead_children:
            edges.append((s, s + 3))
            branches[s] = (0, 128)
        else:
            branches[s] = (128,)
        edges += [(s, low), (s, high), (low, nxt), (high, nxt)]
    return Cfg(exit_node + 1, tuple(edges), branches)


def pattern_input(pattern: int, stages: int) -> bytes:
    return bytes(HIGH if pattern >> k & 1 else LOW for k in range(stages))


def plateau_fixture(
    n_seeds: int = 30, stages: int = 5, dead_children: bool = True
) -> tuple[Cfg, list[bytes]]:
    """Diamond target plus ``n_seeds`` distinct arm patterns covering every arm.

    Every input walks through every stage, so the seeds already reach all
    reachable edges and no mutant can add coverage.
    """
    if n_seeds > 2**stages:
        raise ValueError("not enough distinct patterns")
    # Patterns 1..n keep the all-low pattern out unless every pattern is needed.
    patterns = range(2**stages) if n_seeds == 2**stages else range(1, n_seeds + 1)
    seeds = [pattern_input(p, stages) for p in patterns]
    return diamond_cfg(stages, dead_children), seeds


def fan_cfg(width: int) -> Cfg:
    """Entry fans out to ``width`` arms; arm ``k`` has a dead child and a live leaf."""
    edges = []
    for k in range(width):
        edges.append((0, 1 + 3 * k))
    branches = {0: tuple(round(256 * k / width) for k in range(1, width))} if width > 1 else {}
    for k in range(width):
        arm = 1 + 3 * k
        edges += [(arm, arm + 1), (arm, arm + 2)]
        branches[arm] = (0,)
    return Cfg(1 + 3 * width, tuple(edges), branches)


def fan_input(k: int, width: int) -> bytes:
    lo = 0 if k == 0 else round(256 * k / width)
    return bytes([lo])


def duplicated_fixture(distinct: int = 5, copies: int = 20) -> tuple[Cfg, list[bytes]]:
    """``distinct`` seeds with pairwise different feature sets, each repeated ``copies`` times."""
    cfg = fan_cfg(distinct)
    seeds = [fan_input(k, distinct) for k in range(distinct) for _ in range(copies)]
    return cfg, seeds


# Feature sets of the six-seed, four-feature distillation example.
DISTILL_SETS = ({0, 1}, {1, 2}, {0, 2}, {3}, {3}, {0})


def distill_cfg() -> Cfg:
    """Four optional feature nodes; each feature node owns a dead child.

    Node ids: stage ``3i``, feature ``3i+1``, dead ``3i+2``, exit ``12``.
    """
    edges = []
    branches = {}
    for i in range(4):
        stage, feat, dead = 3 * i, 3 * i + 1, 3 * i + 2
        nxt = 3 * (i + 1)
        edges += [(stage, nxt), (stage, feat), (feat, dead), (feat, nxt)]
        branches[stage] = (128,)
        branches[feat] = (0,)
    return Cfg(13, tuple(edges), branches)


def distill_input(features: set[int]) -> bytes:
    out = bytearray()
    for i in range(4):
        if i in features:
            out += bytes([HIGH, 0x00])
        else:
            out.append(LOW)
    return bytes(out)


def distill_fixture() -> tuple[Cfg, list[bytes]]:
    return distill_cfg(), [distill_input(fs) for fs in DISTILL_SETS]


def distill_instance() -> CoverInstance:
    sets = tuple((i, Bitmap.from_indices(4, fs)) for i, fs in enumerate(DISTILL_SETS))
    return CoverInstance(Bitmap.full(4), sets)


# Seeds 1..6 over features a=0, b=1, c=2: {1,2,3} and {4,5,6} are disjoint
# complete covers, and {1,2,4} is a third one.
TWIN_COVER_SETS = {1: {0}, 2: {1}, 3: {2}, 4: {0, 2}, 5: {1}, 6: {2}}


def twin_cover_instance() -> CoverInstance:
    sets = tuple((i, Bitmap.from_indices(3, fs)) for i, fs in TWIN_COVER_SETS.items())
    return CoverInstance(Bitmap.full(3), sets)


def duplicated_instance(
    n_sets: int, width: int = 64, distinct: int = 16, rng_seed: int = 0
) -> CoverInstance:
    """``n_sets`` sets drawn round-robin from ``distinct`` base sets over ``width`` features."""
    rng = np.random.default_rng(rng_seed)
    base = []
    for _ in range(distinct):
        mask = rng.random(width) < 0.25
        base.append(sum(1 << int(i) for i in np.flatnonzero(mask)))
    union = 0
    for b in base:
        union |= b
    sets = tuple((i, Bitmap(width, base[i % distinct])) for i in range(n_sets))
    return CoverInstance(Bitmap(width, union), sets)
