"""Cover time versus corpus size, plus per-campaign overhead on a duplicated corpus."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from _config import parse_config

from randset import FeatureMode
from randset.fixtures import duplicated_fixture, duplicated_instance
from randset.metrics import overhead_fraction
from randset.scheduler import CampaignConfig, Strategy, run_campaign
from randset.setcover import greedy_cover, randomized_cover


@dataclass(frozen=True)
class ScalingConfig:
    sizes: tuple[int, ...] = (1000, 2000, 4000, 8000, 16000)
    width: int = 64
    distinct: int = 16
    repeats: int = 41
    campaign_copies: int = 2000
    campaign_rounds: int = 10


def best_of(fn, repeats: int) -> float:
    return min(fn().elapsed for _ in range(repeats))


def main(argv=None) -> None:
    conf = parse_config(ScalingConfig, __doc__, argv)
    print(f"{'sets':>7} {'randomized_us':>14} {'greedy_us':>10} {'ratio':>6}")
    prev = None
    for n in conf.sizes:
        inst = duplicated_instance(n, conf.width, conf.distinct, rng_seed=6)
        rng = np.random.default_rng(n)
        r = best_of(lambda: randomized_cover(inst, rng), conf.repeats)
        g = best_of(lambda: greedy_cover(inst), max(3, conf.repeats // 8))
        growth = f"  x{r / prev:.2f} per doubling" if prev else ""
        print(f"{n:7d} {r * 1e6:14.1f} {g * 1e6:10.1f} {g / r:6.1f}{growth}")
        prev = r

    cfg, seeds = duplicated_fixture(5, conf.campaign_copies)
    print(f"\ncampaign overhead, {len(seeds)} seeds, wall clock")
    for mode in FeatureMode:
        for strategy in (Strategy.RANDSET, Strategy.GREEDY, Strategy.CULLQUEUE):
            stats = run_campaign(
                CampaignConfig(cfg, seeds, strategy, mode, conf.campaign_rounds, rng_seed=1, clock="wall")
            )
            print(f"  {strategy.value:10} {mode.value:9} overhead {overhead_fraction(stats):6.2f}%")


if __name__ == "__main__":
    main()
