"""Seed-selection diversity on a saturated corpus, per strategy and feature mode."""

from __future__ import annotations

from dataclasses import dataclass

from _config import parse_config

from randset import FeatureMode
from randset.fixtures import plateau_fixture
from randset.metrics import cdf_at, selection_cdf, unique_seeds
from randset.scheduler import CampaignConfig, Strategy, run_campaign


@dataclass(frozen=True)
class PlateauConfig:
    seeds: int = 30
    stages: int = 5
    rounds: int = 200
    mutants: int = 64
    rng_seed: int = 1
    cdf_ranks: tuple[int, ...] = (1, 2, 5, 10, 20)


def main(argv=None) -> None:
    conf = parse_config(PlateauConfig, __doc__, argv)
    cfg, seeds = plateau_fixture(conf.seeds, conf.stages)
    ranks = " ".join(f"cdf@{r:<3}" for r in conf.cdf_ranks)
    print(f"{'strategy':10} {'features':9} {'unique':>6}  {ranks}")
    for mode in FeatureMode:
        for strategy in Strategy:
            stats = run_campaign(
                CampaignConfig(cfg, seeds, strategy, mode, conf.rounds, conf.mutants,
                               rng_seed=conf.rng_seed, clock="virtual")
            )
            cdf = selection_cdf(stats)
            row = " ".join(f"{cdf_at(cdf, r):7.3f}" for r in conf.cdf_ranks)
            print(f"{strategy.value:10} {mode.value:9} {unique_seeds(stats):6d}  {row}")


if __name__ == "__main__":
    main()
