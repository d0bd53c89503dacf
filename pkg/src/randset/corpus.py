"""Seed store, global coverage state and per-seed feature sets."""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Optional

from randset.bitmap import Bitmap, EdgeBitmap, FeatureBitmap, NodeBitmap, WidthMismatchError
from randset.cfg import Cfg, frontier_nodes
from randset.setcover import CoverInstance
from randset.target import DEFAULT_MAX_STEPS, Trace, execute

SEED_FILE_RE = re.compile(r"^id_(\d+)\.bin$")


class FeatureMode(enum.Enum):
    FRONTIER = "frontier"
    EDGE = "edge"


@dataclass
class SeedRecord:
    id: int
    data: bytes
    nodes: NodeBitmap
    edges: EdgeBitmap
    cost: int
    discovery_round: int
    fuzzed_before: bool = False

    @property
    def length(self) -> int:
        return len(self.data)


class Corpus:
    """Append-only seed list plus the union of all seeds' coverage."""

    def __init__(self, cfg: Cfg):
        self.cfg = cfg
        self.seeds: list[SeedRecord] = []
        self.global_nodes: NodeBitmap = cfg.empty_nodes()
        self.global_edges: EdgeBitmap = cfg.empty_edges()

    def __len__(self) -> int:
        return len(self.seeds)

    def __getitem__(self, seed_id: int) -> SeedRecord:
        return self.seeds[seed_id]

    def _check(self, trace: Trace) -> None:
        if trace.nodes.width != self.cfg.node_count or trace.edges.width != self.cfg.edge_count:
            raise WidthMismatchError("trace bitmaps do not match the corpus CFG")

    def add(self, data: bytes, trace: Trace, round: int = 0) -> int:
        """Append unconditionally (initial seeds, directory import)."""
        self._check(trace)
        seed = SeedRecord(
            id=len(self.seeds),
            data=bytes(data),
            nodes=trace.nodes,
            edges=trace.edges,
            cost=trace.cost,
            discovery_round=round,
        )
        self.seeds.append(seed)
        self.global_nodes = self.global_nodes | trace.nodes
        self.global_edges = self.global_edges | trace.edges
        return seed.id

    def maybe_save(self, data: bytes, trace: Trace, round: int) -> Optional[int]:
        """Save ``data`` only if its trace reaches an edge not yet in the corpus."""
        self._check(trace)
        if trace.edges.issubset(self.global_edges):
            return None
        return self.add(data, trace, round)

    def frontier(self) -> NodeBitmap:
        return frontier_nodes(self.cfg, self.global_nodes)


def feature_set(seed: SeedRecord, mode: FeatureMode, current_frontier: NodeBitmap) -> FeatureBitmap:
    if mode is FeatureMode.EDGE:
        return seed.edges
    if current_frontier.width != seed.nodes.width:
        raise WidthMismatchError("frontier width does not match seed node bitmap")
    return seed.nodes & current_frontier


def universe(corpus: Corpus, mode: FeatureMode) -> FeatureBitmap:
    if mode is FeatureMode.EDGE:
        return corpus.global_edges
    return corpus.frontier()


def cover_instance(
    corpus: Corpus, mode: FeatureMode, seed_ids: Optional[Iterable[int]] = None
) -> CoverInstance:
    """Build the set-cover instance for the current corpus state.

    Frontier feature sets are recomputed against the live frontier on every
    call. With ``seed_ids`` the instance is restricted to those seeds and its
    universe is their union.
    """
    if mode is FeatureMode.EDGE:
        width = corpus.cfg.edge_count
        pairs = [(s.id, s.edges.bits) for s in corpus.seeds]
    else:
        width = corpus.cfg.node_count
        fbits = corpus.frontier().bits
        pairs = [(s.id, s.nodes.bits & fbits) for s in corpus.seeds]
    if seed_ids is not None:
        pairs = [pairs[i] for i in seed_ids]
    union = 0
    for _, bits in pairs:
        union |= bits
    return CoverInstance(Bitmap(width, union), tuple((i, Bitmap(width, b)) for i, b in pairs))


def seed_files(path: Path | str) -> list[Path]:
    """``id_<n>.bin`` files under ``path`` in numeric order of ``n``."""
    path = Path(path)
    if not path.is_dir():
        raise FileNotFoundError(f"seed directory not found: {path}")
    found = []
    for entry in path.iterdir():
        m = SEED_FILE_RE.match(entry.name)
        if m and entry.is_file():
            found.append((int(m.group(1)), entry))
    return [entry for _, entry in sorted(found)]


def import_corpus_dir(cfg: Cfg, path: Path | str, max_steps: int = DEFAULT_MAX_STEPS) -> Corpus:
    """Load every seed file unconditionally; coverage comes from re-execution.

    Seed ids are dense in file order, so ``seed_files(path)[i]`` backs seed ``i``.
    """
    corpus = Corpus(cfg)
    for entry in seed_files(path):
        data = entry.read_bytes()
        corpus.add(data, execute(cfg, data, max_steps), round=0)
    return corpus


def export_corpus_dir(seeds: Iterable[SeedRecord], path: Path | str) -> list[Path]:
    path = Path(path)
    path.mkdir(parents=True, exist_ok=True)
    written = []
    for seed in seeds:
        target = path / f"id_{seed.id}.bin"
        target.write_bytes(seed.data)
        written.append(target)
    return written
