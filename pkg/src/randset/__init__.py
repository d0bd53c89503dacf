"""Randomized corpus reduction for fuzzing seed schedulers, on synthetic targets."""

from randset.bitmap import Bitmap
from randset.cfg import Cfg, build_cfg, frontier_nodes, generate_random_cfg, parse_cfg, serialize_cfg
from randset.corpus import Corpus, FeatureMode, SeedRecord, feature_set, universe
from randset.setcover import (
    CoverInstance,
    CoverResult,
    InfeasibleCoverError,
    exact_min_cover,
    greedy_cover,
    randomized_cover,
)
from randset.target import Trace, execute

__version__ = "0.1.0"

__all__ = [
    "Bitmap",
    "Cfg",
    "CoverInstance",
    "CoverResult",
    "Corpus",
    "FeatureMode",
    "InfeasibleCoverError",
    "SeedRecord",
    "Trace",
    "build_cfg",
    "exact_min_cover",
    "execute",
    "feature_set",
    "frontier_nodes",
    "generate_random_cfg",
    "greedy_cover",
    "parse_cfg",
    "randomized_cover",
    "serialize_cfg",
    "universe",
]
