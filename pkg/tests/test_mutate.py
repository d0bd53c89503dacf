from collections import Counter

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from randset.mutate import OPS, max_child_length, mutate, mutate_logged


def test_empty_parent_bound():
    for k in range(500):
        assert len(mutate(b"", np.random.default_rng(k))) <= 16


def test_fixed_seed_same_child():
    parent = b"hello fuzzing world"
    assert mutate(parent, np.random.default_rng(3)) == mutate(parent, np.random.default_rng(3))


def test_all_operation_kinds_observed():
    rng = np.random.default_rng(0)
    seen = Counter()
    stack_sizes = Counter()
    for _ in range(10_000):
        _, ops = mutate_logged(b"\x00\x11\x22\x33\x44\x55\x66\x77", rng)
        seen.update(ops)
        stack_sizes[len(ops)] += 1
    assert set(seen) == set(OPS)
    assert set(stack_sizes) == set(range(1, 9))


@settings(max_examples=300, deadline=None)
@given(st.binary(max_size=64), st.integers(0, 2**32))
def test_length_bound(parent, seed):
    child = mutate(parent, np.random.default_rng(seed))
    assert 0 <= len(child) <= max_child_length(len(parent))
