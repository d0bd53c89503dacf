"""Campaign logs and the evaluation quantities computed from them."""

from __future__ import annotations

import csv
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

from randset.bitmap import EdgeBitmap, NodeBitmap

ROUNDS_HEADER = ("round", "selected_id", "subset_size", "corpus_size", "reduction_us", "round_us")
CDF_HEADER = ("rank", "seed_id", "frequency", "cumulative")
SUMMARY_HEADER = (
    "strategy",
    "feature_mode",
    "final_edges",
    "subset_ratio_pct",
    "unique_seeds",
    "overhead_pct",
)


@dataclass(frozen=True)
class RoundRecord:
    round: int
    strategy: str
    selected_id: int
    subset_size: int
    corpus_size: int
    reduction_us: int
    round_us: int


@dataclass
class CampaignStats:
    strategy: str
    feature_mode: str
    rounds: list[RoundRecord] = field(default_factory=list)
    final_nodes: NodeBitmap | None = None
    final_edges: EdgeBitmap | None = None
    subsets: list[tuple[int, ...]] = field(default_factory=list, repr=False)

    def selected(self) -> list[int]:
        return [r.selected_id for r in self.rounds]


def subset_ratio(stats: CampaignStats) -> float:
    last = stats.rounds[-1]
    return 100.0 * last.subset_size / last.corpus_size


def unique_seeds(stats: CampaignStats) -> int:
    return len(set(stats.selected()))


def selection_frequencies(stats: CampaignStats) -> list[tuple[int, int]]:
    """``(seed_id, count)`` by descending count, then ascending id."""
    counts = Counter(stats.selected())
    return sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))


def cdf_from_counts(counts: Iterable[int]) -> list[tuple[int, float]]:
    ordered = sorted(counts, reverse=True)
    total = sum(ordered)
    out = []
    running = 0
    for rank, c in enumerate(ordered, 1):
        running += c
        out.append((rank, running / total))
    return out


def selection_cdf(stats: CampaignStats) -> list[tuple[int, float]]:
    return cdf_from_counts(c for _, c in selection_frequencies(stats))


def cdf_at(cdf: list[tuple[int, float]], rank: int) -> float:
    """CDF value at ``rank``; past the last rank the curve stays at 1.0."""
    if rank <= 0:
        return 0.0
    if rank > len(cdf):
        return 1.0
    return cdf[rank - 1][1]


def overhead_fraction(stats: CampaignStats) -> float:
    total = sum(r.round_us for r in stats.rounds)
    if total == 0:
        return 0.0
    return 100.0 * sum(r.reduction_us for r in stats.rounds) / total


def summary_row(stats: CampaignStats) -> dict[str, object]:
    return {
        "strategy": stats.strategy,
        "feature_mode": stats.feature_mode,
        "final_edges": len(stats.final_edges) if stats.final_edges is not None else 0,
        "subset_ratio_pct": f"{subset_ratio(stats):.4f}",
        "unique_seeds": unique_seeds(stats),
        "overhead_pct": f"{overhead_fraction(stats):.4f}",
    }


def write_rounds_csv(stats: CampaignStats, path: Path | str) -> None:
    with open(path, "w", newline="", encoding="ascii") as fp:
        writer = csv.writer(fp, lineterminator="\n")
        writer.writerow(ROUNDS_HEADER)
        for r in stats.rounds:
            writer.writerow(
                (r.round, r.selected_id, r.subset_size, r.corpus_size, r.reduction_us, r.round_us)
            )


def write_cdf_csv(stats: CampaignStats, path: Path | str) -> None:
    freqs = selection_frequencies(stats)
    cdf = cdf_from_counts(c for _, c in freqs)
    with open(path, "w", newline="", encoding="ascii") as fp:
        writer = csv.writer(fp, lineterminator="\n")
        writer.writerow(CDF_HEADER)
        for (seed_id, count), (rank, cum) in zip(freqs, cdf):
            writer.writerow((rank, seed_id, count, f"{cum:.6f}"))


def write_summary_csv(all_stats: Iterable[CampaignStats], path: Path | str) -> None:
    with open(path, "w", newline="", encoding="ascii") as fp:
        writer = csv.DictWriter(fp, fieldnames=SUMMARY_HEADER, lineterminator="\n")
        writer.writeheader()
        for stats in all_stats:
            writer.writerow(summary_row(stats))
