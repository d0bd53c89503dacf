import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from randset.bitmap import Bitmap, WidthMismatchError
from randset.cfg import Cfg, frontier_nodes, generate_random_cfg
from randset.corpus import (
    Corpus,
    FeatureMode,
    cover_instance,
    export_corpus_dir,
    feature_set,
    import_corpus_dir,
    universe,
)
from randset.fixtures import DISTILL_SETS, distill_fixture
from randset.target import execute


def test_first_execution_saved(two_way):
    c = Corpus(two_way)
    assert c.maybe_save(b"\x10", execute(two_way, b"\x10"), 0) == 0


def test_reexecution_not_saved(two_way):
    c = Corpus(two_way)
    c.maybe_save(b"\x10", execute(two_way, b"\x10"), 0)
    before = (len(c), c.global_edges, c.global_nodes)
    assert c.maybe_save(b"\x10", execute(two_way, b"\x10"), 1) is None
    assert (len(c), c.global_edges, c.global_nodes) == before


def test_one_new_edge_flips(two_way):
    c = Corpus(two_way)
    c.maybe_save(b"\x10", execute(two_way, b"\x10"), 0)
    old = c.global_edges
    assert c.maybe_save(b"\xf0", execute(two_way, b"\xf0"), 1) == 1
    assert set(c.global_edges - old) == {1}


def test_width_mismatch(two_way, chain):
    c = Corpus(two_way)
    with pytest.raises(WidthMismatchError):
        c.maybe_save(b"", execute(Cfg(5), b""), 0)
    with pytest.raises(WidthMismatchError):
        feature_set(_seed(two_way), FeatureMode.FRONTIER, Bitmap(7))


def _seed(cfg):
    c = Corpus(cfg)
    c.add(b"", execute(cfg, b""))
    return c.seeds[0]


def test_feature_set_modes(chain):
    c = Corpus(chain)
    c.add(b"", execute(chain, b""))
    seed = c.seeds[0]
    assert feature_set(seed, FeatureMode.EDGE, Bitmap(3)) is seed.edges
    assert not feature_set(seed, FeatureMode.FRONTIER, Bitmap(3))
    # seed visiting {A, B} with frontier {B}
    seed.nodes = Bitmap.from_indices(3, [0, 1])
    assert set(feature_set(seed, FeatureMode.FRONTIER, Bitmap.from_indices(3, [1]))) == {1}


def test_empty_universe(chain):
    c = Corpus(chain)
    for mode in FeatureMode:
        assert not universe(c, mode)


def test_distill_universe_has_four_features():
    cfg, seeds = distill_fixture()
    c = Corpus(cfg)
    for s in seeds:
        c.add(s, execute(cfg, s))
    u = universe(c, FeatureMode.FRONTIER)
    assert len(u) == 4
    inst = cover_instance(c, FeatureMode.FRONTIER)
    feat_node = {3 * i + 1: i for i in range(4)}
    assert [{feat_node[n] for n in fs} for _, fs in inst.sets] == [set(x) for x in DISTILL_SETS]


def _random_corpus(seed, n_inputs=40, size=40):
    import numpy as np

    cfg = generate_random_cfg(size, 3, 0.1, seed)
    rng = np.random.default_rng(seed)
    c = Corpus(cfg)
    for r in range(n_inputs):
        data = rng.integers(0, 256, size=int(rng.integers(0, 12)), dtype=np.uint8).tobytes()
        c.maybe_save(data, execute(cfg, data), r)
    return c


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32))
def test_union_of_feature_sets_is_universe(seed):
    c = _random_corpus(seed)
    for mode in FeatureMode:
        inst = cover_instance(c, mode)
        union = 0
        for _, fs in inst.sets:
            union |= fs.bits
        assert union == universe(c, mode).bits
    edges = 0
    nodes = 0
    for s in c.seeds:
        edges |= s.edges.bits
        nodes |= s.nodes.bits
    assert edges == c.global_edges.bits and nodes == c.global_nodes.bits


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32))
def test_saving_soundness_and_monotonicity(seed):
    import numpy as np

    cfg = generate_random_cfg(40, 3, 0.1, seed)
    rng = np.random.default_rng(seed)
    c = Corpus(cfg)
    for r in range(60):
        data = rng.integers(0, 256, size=int(rng.integers(0, 10)), dtype=np.uint8).tobytes()
        t = execute(cfg, data)
        before = c.global_edges
        saved = c.maybe_save(data, t, r)
        grows = not t.edges.issubset(before)
        assert (saved is not None) == grows
        assert before.issubset(c.global_edges)
        assert [s.id for s in c.seeds] == list(range(len(c)))


def test_saturated_node_leaves_all_feature_sets(two_way):
    c = Corpus(two_way)
    c.add(b"\x10", execute(two_way, b"\x10"))
    assert set(universe(c, FeatureMode.FRONTIER)) == {0}
    assert set(cover_instance(c, FeatureMode.FRONTIER).sets[0][1]) == {0}
    c.maybe_save(b"\xf0", execute(two_way, b"\xf0"), 1)
    # node 0 has no unvisited child now; no seed may carry it as a feature
    assert not universe(c, FeatureMode.FRONTIER)
    assert all(not fs for _, fs in cover_instance(c, FeatureMode.FRONTIER).sets)


def test_frontier_features_recomputed_per_call():
    c = _random_corpus(3)
    f = frontier_nodes(c.cfg, c.global_nodes)
    inst = cover_instance(c, FeatureMode.FRONTIER)
    for (sid, fs) in inst.sets:
        assert fs == c[sid].nodes & f


def test_directory_round_trip(tmp_path):
    c = _random_corpus(11)
    export_corpus_dir(c.seeds, tmp_path / "q")
    (tmp_path / "q" / "README").write_text("ignored")
    back = import_corpus_dir(c.cfg, tmp_path / "q")
    assert [s.data for s in back.seeds] == [s.data for s in c.seeds]
    assert [s.edges for s in back.seeds] == [s.edges for s in c.seeds]
    assert back.global_edges == c.global_edges


def test_import_numeric_order(tmp_path, two_way):
    (tmp_path / "id_10.bin").write_bytes(b"\xf0")
    (tmp_path / "id_2.bin").write_bytes(b"\x10")
    c = import_corpus_dir(two_way, tmp_path)
    assert [s.data for s in c.seeds] == [b"\x10", b"\xf0"]


def test_import_missing_dir(tmp_path, two_way):
    with pytest.raises(FileNotFoundError):
        import_corpus_dir(two_way, tmp_path / "nope")
