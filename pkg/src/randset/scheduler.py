"""Campaign loop: reduce, select, mutate, execute, save.

Strategies
----------
``randset``   randomized cover of the corpus each round, newest seed of the cover
``greedy``    greedy cover each round, newest seed of the cover
``cullqueue`` AFL-style favored set (cheapest seed per edge), first unfuzzed favored
``wrandom``   weighted random draw from the whole corpus

Clocks
------
``wall`` records monotonic wall-clock microseconds. ``virtual`` records work
units instead: set examinations during reduction plus execution steps per
mutant, which makes every logged number reproducible.
"""

from __future__ import annotations

import enum
import logging
import time
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from randset.cfg import Cfg
from randset.corpus import Corpus, FeatureMode, cover_instance
from randset.metrics import CampaignStats, RoundRecord
from randset.mutate import mutate
from randset.rng import Streams
from randset.setcover import greedy_cover, randomized_cover
from randset.target import DEFAULT_MAX_STEPS, execute

log = logging.getLogger(__name__)


class Strategy(enum.Enum):
    RANDSET = "randset"
    GREEDY = "greedy"
    CULLQUEUE = "cullqueue"
    WRANDOM = "wrandom"


class CampaignError(RuntimeError):
    pass


@dataclass
class CampaignConfig:
    cfg: Cfg
    initial_seeds: Sequence[bytes]
    strategy: Strategy = Strategy.RANDSET
    feature_mode: FeatureMode = FeatureMode.FRONTIER
    rounds: int = 200
    mutants_per_round: int = 64
    max_steps: int = DEFAULT_MAX_STEPS
    rng_seed: int = 0
    clock: str = "wall"
    keep_subsets: bool = field(default=True, repr=False)

    def __post_init__(self) -> None:
        if self.rounds < 1:
            raise ValueError("rounds must be >= 1")
        if self.mutants_per_round < 1:
            raise ValueError("mutants_per_round must be >= 1")
        if self.clock not in ("wall", "virtual"):
            raise ValueError(f"unknown clock {self.clock!r}")
        self.strategy = Strategy(self.strategy)
        self.feature_mode = FeatureMode(self.feature_mode)


def select_newest(subset: Sequence[int], corpus: Corpus) -> int:
    """Seed with the latest discovery round; the highest id breaks ties."""
    if not subset:
        raise ValueError("cannot select from an empty subset")
    return max(subset, key=lambda i: (corpus[i].discovery_round, i))


def top_rated(corpus: Corpus) -> dict[int, int]:
    """Per covered edge, the seed minimizing cost * length (lowest id on ties)."""
    best: dict[int, tuple[int, int]] = {}
    for seed in corpus.seeds:
        score = seed.cost * seed.length
        for eid in seed.edges:
            cur = best.get(eid)
            if cur is None or (score, seed.id) < cur:
                best[eid] = (score, seed.id)
    return {eid: sid for eid, (_, sid) in best.items()}


def favored_seeds(corpus: Corpus) -> list[int]:
    """Stage one of cull_queue: walk edges in id order, adding top-rated seeds
    for edges the favored set does not cover yet. Returned in queue (id) order."""
    rated = top_rated(corpus)
    covered = 0
    favored = set()
    for eid in range(corpus.cfg.edge_count):
        if eid not in rated or covered >> eid & 1:
            continue
        sid = rated[eid]
        favored.add(sid)
        covered |= corpus[sid].edges.bits
    return sorted(favored)


def _cull_queue_pick(corpus: Corpus, favored: Sequence[int]) -> int:
    if not corpus.seeds:
        raise CampaignError("empty corpus")
    # No covered edges means nothing is favored; fall back to plain queue order.
    pool = favored or range(len(corpus))
    pick = next((sid for sid in pool if not corpus[sid].fuzzed_before), pool[0])
    corpus[pick].fuzzed_before = True
    return pick


def cull_queue_select(corpus: Corpus) -> int:
    """Stage two: first favored seed not fuzzed yet, else the first favored one."""
    return _cull_queue_pick(corpus, favored_seeds(corpus))


def weighted_random_select(corpus: Corpus, rng: np.random.Generator) -> int:
    if not corpus.seeds:
        raise CampaignError("empty corpus")
    weights = np.array([1 + len(s.edges) for s in corpus.seeds], dtype=float)
    return int(rng.choice(len(weights), p=weights / weights.sum()))


def _select(
    corpus: Corpus, config: CampaignConfig, streams: Streams, round_no: int
) -> tuple[int, tuple[int, ...], int, float]:
    """Returns (selected id, the round's subset, reduction work units, reduction seconds).

    For the cover strategies the reduction time is the cover call alone;
    building the per-seed feature sets is charged to the round.
    """
    strategy = config.strategy
    if strategy in (Strategy.RANDSET, Strategy.GREEDY):
        instance = cover_instance(corpus, config.feature_mode)
        if strategy is Strategy.RANDSET:
            result = randomized_cover(instance, streams.generator("shuffle", round_no))
        else:
            result = greedy_cover(instance)
        subset = result.chosen
        if not subset:
            # Empty universe (e.g. no frontier left): nothing to reduce against.
            subset = tuple(range(len(corpus)))
        return select_newest(subset, corpus), subset, result.work, result.elapsed
    if strategy is Strategy.CULLQUEUE:
        start = time.perf_counter()
        favored = favored_seeds(corpus)
        elapsed = time.perf_counter() - start
        work = sum(len(s.edges) for s in corpus.seeds) + corpus.cfg.edge_count
        pick = _cull_queue_pick(corpus, favored)
        return pick, tuple(favored) or tuple(range(len(corpus))), work, elapsed
    pick = weighted_random_select(corpus, streams.generator("sample", round_no))
    return pick, tuple(range(len(corpus))), 0, 0.0


def run_campaign(config: CampaignConfig) -> CampaignStats:
    return run_campaign_with_corpus(config)[0]


def run_campaign_with_corpus(config: CampaignConfig) -> tuple[CampaignStats, Corpus]:
    cfg = config.cfg
    streams = Streams(config.rng_seed)
    corpus = Corpus(cfg)
    for data in config.initial_seeds:
        corpus.add(data, execute(cfg, data, config.max_steps), round=0)
    if not corpus.seeds:
        raise CampaignError("empty corpus after initialization")

    stats = CampaignStats(config.strategy.value, config.feature_mode.value)
    wall = config.clock == "wall"
    for round_no in range(1, config.rounds + 1):
        t0 = time.perf_counter()
        corpus_size = len(corpus)
        selected, subset, work, reduction_s = _select(corpus, config, streams, round_no)

        parent = corpus[selected].data
        mrng = streams.generator("mutate", round_no)
        exec_units = 0
        for _ in range(config.mutants_per_round):
            child = mutate(parent, mrng)
            trace = execute(cfg, child, config.max_steps)
            exec_units += trace.steps + 1
            new_id = corpus.maybe_save(child, trace, round_no)
            if new_id is not None:
                log.debug("round %d: saved seed %d", round_no, new_id)
        t2 = time.perf_counter()

        if wall:
            reduction_us = round(reduction_s * 1e6)
            round_us = max(round((t2 - t0) * 1e6), reduction_us)
        else:
            reduction_us = work
            round_us = work + exec_units
        stats.rounds.append(
            RoundRecord(
                round=round_no,
                strategy=config.strategy.value,
                selected_id=selected,
                subset_size=len(subset),
                corpus_size=corpus_size,
                reduction_us=reduction_us,
                round_us=round_us,
            )
        )
        if config.keep_subsets:
            stats.subsets.append(subset)
    stats.final_nodes = corpus.global_nodes
    stats.final_edges = corpus.global_edges
    log.info(
        "%s/%s: %d rounds, corpus %d, edges %d/%d",
        config.strategy.value,
        config.feature_mode.value,
        config.rounds,
        len(corpus),
        len(corpus.global_edges),
        cfg.edge_count,
    )
    return stats, corpus
