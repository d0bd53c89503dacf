import time
import numpy as np
import pytest
from hypothesis import strategies as st

from randset.bitmap import Bitmap
from randset.cfg import Cfg, generate_random_cfg
from randset.setcover import CoverInstance


def random_instance(rng: np.random.Generator, max_sets: int, max_width: int, density=0.3):
    """Feasible instance whose universe is exactly the union of its sets."""
    width = int(rng.integers(1, max_width + 1))
    n = int(rng.integers(1, max_sets + 1))
    sets = []
    union = 0
    for i in range(n):
        bits = 0
        for f in range(width):
            if rng.random() < density:
                bits |= 1 << f
        sets.append((i, Bitmap(width, bits)))
        union |= bits
    return CoverInstance(Bitmap(width, union), tuple(sets))


@st.composite
def cover_instances(draw, max_sets=12, max_width=16):
    width = draw(st.integers(1, max_width))
    masks = draw(st.lists(st.integers(0, 2**width - 1), min_size=1, max_size=max_sets))
    ids = draw(st.permutations(range(100, 100 + len(masks))))
    union = 0
    for m in masks:
        union |= m
    return CoverInstance(Bitmap(width, union), tuple(zip(ids, (Bitmap(width, m) for m in masks))))


@st.composite
def cfg_and_visited(draw, max_nodes=40):
    n = draw(st.integers(1, max_nodes))
    cfg = generate_random_cfg(n, draw(st.integers(1, 4)), draw(st.sampled_from([0.0, 0.2, 0.5])), draw(st.integers(0, 2**32)))
    visited = Bitmap(n, draw(st.integers(0, 2**n - 1)))
    return cfg, visited


@pytest.fixture
def chain():
    return Cfg(3, ((0, 1), (1, 2)))


@pytest.fixture
def two_way():
    """Entry branches on one byte: < 128 to node 1, otherwise node 2."""
    return Cfg(3, ((0, 1), (0, 2)), {0: (128,)})


SUITE_BUDGET_S = 60.0


def pytest_sessionstart(session):
    session.config._suite_t0 = time.perf_counter()


def pytest_sessionfinish(session, exitstatus):
    elapsed = time.perf_counter() - session.config._suite_t0
    ok = elapsed < SUITE_BUDGET_S
    tag = "PASS" if ok else "FAIL"
    print(f"\n[{tag}] criterion 6 (suite budget): whole suite took {elapsed:.1f}s, limit {SUITE_BUDGET_S:.0f}s")
    if not ok and session.exitstatus == 0:
        session.exitstatus = 1
