from hypothesis import given, settings
from hypothesis import strategies as st

from randset.cfg import Cfg, generate_random_cfg
from randset.target import execute


def reference_walk(cfg, data, max_steps):
    """Independent walker: returns (edge list, cursor before each transition)."""
    node, cursor, walk = 0, 0, []
    for _ in range(max_steps):
        kids = [d for s, d in cfg.edges if s == node]
        if not kids:
            break
        if len(kids) == 1:
            child, used = kids[0], cursor
        else:
            b = data[cursor] if cursor < len(data) else 0
            thresholds = cfg.branch_rules[node]
            child = kids[sum(1 for t in thresholds if b >= t)]
            used = cursor
            cursor += 1
        walk.append(((node, child), used))
        node = child
    return walk


def test_single_node_trace():
    cfg = Cfg(1)
    for data in (b"", b"\xff" * 10):
        t = execute(cfg, data)
        assert set(t.nodes) == {0} and not t.edges and t.steps == 0 and t.cost == 0


def test_two_way_hand_walk(two_way):
    low, high = execute(two_way, b"\x10"), execute(two_way, b"\xf0")
    assert set(low.edges) == {0} and set(low.nodes) == {0, 1}
    assert set(high.edges) == {1} and set(high.nodes) == {0, 2}
    assert low.steps == high.steps == 1


def test_threshold_boundaries(two_way):
    assert set(execute(two_way, b"\x7f").edges) == {0}
    assert set(execute(two_way, b"\x80").edges) == {1}
    assert set(execute(two_way, b"").edges) == {0}  # missing byte reads as 0


def test_chain_does_not_consume_input(chain):
    t = execute(chain, b"")
    assert set(t.edges) == {0, 1} and t.steps == 2


def test_max_steps_bounds_loops():
    loop = Cfg(2, ((0, 1), (1, 0)))
    t = execute(loop, b"", max_steps=7)
    assert t.steps == 7
    assert set(t.edges) == {0, 1}


def test_deterministic():
    cfg = generate_random_cfg(60, 3, 0.3, 5)
    assert execute(cfg, b"abcdef") == execute(cfg, b"abcdef")


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 40), st.integers(1, 4), st.floats(0, 0.5), st.integers(0, 2**32), st.binary(max_size=40))
def test_matches_reference_walk(n, k, p, seed, data):
    cfg = generate_random_cfg(n, k, p, seed)
    t = execute(cfg, data, max_steps=200)
    walk = reference_walk(cfg, data, 200)
    assert set(t.edges) == {cfg.edge_ids[e] for e, _ in walk}
    assert t.steps == len(walk) <= 200
    assert 0 in t.nodes
    endpoints = {0}
    for e in t.edges:
        endpoints.update(cfg.edges[e])
    assert set(t.nodes) == endpoints


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 40), st.integers(1, 4), st.integers(0, 2**32), st.binary(max_size=20), st.binary(max_size=20))
def test_prefix_coverage_kept_on_acyclic(n, k, seed, prefix, suffix):
    cfg = generate_random_cfg(n, k, 0.0, seed)
    extended = execute(cfg, prefix + suffix)
    walk = reference_walk(cfg, prefix, 4096)
    before_suffix = {cfg.edge_ids[e] for e, used in walk if used < len(prefix)}
    assert before_suffix <= set(extended.edges)
    # zero padding is indistinguishable from missing bytes
    assert execute(cfg, prefix + bytes(len(suffix))) == execute(cfg, prefix)
