"""Coverage reached by RandSet against its two ablations on generated targets.

``randset``  randomized cover over frontier features
``r-g``      greedy cover over frontier features
``r-e``      randomized cover over edge features
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from _config import parse_config

from randset import FeatureMode
from randset.cfg import generate_random_cfg
from randset.metrics import unique_seeds
from randset.scheduler import CampaignConfig, Strategy, run_campaign

VARIANTS = {
    "randset": (Strategy.RANDSET, FeatureMode.FRONTIER),
    "r-g": (Strategy.GREEDY, FeatureMode.FRONTIER),
    "r-e": (Strategy.RANDSET, FeatureMode.EDGE),
}


@dataclass(frozen=True)
class AblationConfig:
    targets: int = 5
    nodes: int = 300
    max_children: int = 3
    loop_back: float = 0.1
    initial_seeds: int = 4
    seed_len: int = 8
    rounds: int = 100
    mutants: int = 32
    trials: int = 3


def main(argv=None) -> None:
    conf = parse_config(AblationConfig, __doc__.splitlines()[0], argv)
    print(f"{'target':>6} {'variant':8} {'edges(mean)':>11} {'unique(mean)':>12}")
    for t in range(conf.targets):
        cfg = generate_random_cfg(conf.nodes, conf.max_children, conf.loop_back, 1000 + t)
        rng = np.random.default_rng(t)
        init = [rng.integers(0, 256, conf.seed_len, dtype=np.uint8).tobytes() for _ in range(conf.initial_seeds)]
        for name, (strategy, mode) in VARIANTS.items():
            edges, uniq = [], []
            for trial in range(conf.trials):
                stats = run_campaign(
                    CampaignConfig(cfg, init, strategy, mode, conf.rounds, conf.mutants,
                                   rng_seed=trial, clock="virtual", keep_subsets=False)
                )
                edges.append(len(stats.final_edges))
                uniq.append(unique_seeds(stats))
            print(f"{t:6d} {name:8} {np.mean(edges):11.1f} {np.mean(uniq):12.1f}")


if __name__ == "__main__":
    main()
