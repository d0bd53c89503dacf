"""Command-line entry point.

    randset gen-target --nodes 50 --max-children 3 --loop-back 0.1 --seed 42 --out t.cfg
    randset run      --cfg t.cfg --seeds seeds/ --strategy randset --features frontier \\
                     --rounds 200 --mutants 64 --seed 1 --out out/
    randset compare  --cfg t.cfg --seeds seeds/ --strategies randset,greedy,cullqueue \\
                     --rounds 200 --seed 1 --out out/
    randset reduce   --cfg t.cfg --seeds seeds/ --features frontier --algorithm randomized \\
                     --seed 1 --out reduced/

Exit codes: 0 ok, 1 usage, 2 I/O, 3 infeasible cover.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import shutil
import sys
from pathlib import Path

from randset import __version__
from randset.cfg import CfgError, generate_random_cfg, parse_cfg, serialize_cfg
from randset.corpus import FeatureMode, cover_instance, import_corpus_dir, seed_files, universe
from randset.metrics import write_cdf_csv, write_rounds_csv, write_summary_csv
from randset.rng import Streams
from randset.scheduler import CampaignConfig, Strategy, run_campaign
from randset.setcover import (
    CoverTooLargeError,
    InfeasibleCoverError,
    exact_min_cover,
    greedy_cover,
    randomized_cover,
)
from randset.target import DEFAULT_MAX_STEPS

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_INFEASIBLE = 3

log = logging.getLogger("randset")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _u64(text: str) -> int:
    value = int(text, 0)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in 64 bits")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _load_cfg(path: str):
    try:
        return parse_cfg(Path(path).read_text())
    except OSError as exc:
        raise FileNotFoundError(f"cannot read CFG {path}: {exc}") from exc


def _load_seeds(path: str) -> list[bytes]:
    files = seed_files(path)
    if not files:
        raise FileNotFoundError(f"no id_<n>.bin seed files in {path}")
    return [f.read_bytes() for f in files]


def _write_manifest(out: Path, command: str, args: dict) -> None:
    manifest = {"command": command, "version": __version__, "rng_seed": args.get("seed"), "args": args}
    (out / "manifest.json").write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")


def _campaign_config(args, cfg, seeds, strategy: str) -> CampaignConfig:
    return CampaignConfig(
        cfg=cfg,
        initial_seeds=seeds,
        strategy=Strategy(strategy),
        feature_mode=FeatureMode(args.features),
        rounds=args.rounds,
        mutants_per_round=args.mutants,
        max_steps=args.max_steps,
        rng_seed=args.seed,
        clock=args.clock,
        keep_subsets=False,
    )


def cmd_gen_target(args) -> int:
    cfg = generate_random_cfg(args.nodes, args.max_children, args.loop_back, args.seed)
    out = Path(args.out)
    if out.parent != Path(""):
        out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(serialize_cfg(cfg))
    print(f"wrote {out}: {cfg.node_count} nodes, {cfg.edge_count} edges")
    return EXIT_OK


def cmd_run(args) -> int:
    cfg = _load_cfg(args.cfg)
    seeds = _load_seeds(args.seeds)
    stats = run_campaign(_campaign_config(args, cfg, seeds, args.strategy))
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    write_rounds_csv(stats, out / "rounds.csv")
    write_cdf_csv(stats, out / "cdf.csv")
    write_summary_csv([stats], out / "summary.csv")
    _write_manifest(out, "run", _echo(args))
    print((out / "summary.csv").read_text(), end="")
    return EXIT_OK


def cmd_compare(args) -> int:
    cfg = _load_cfg(args.cfg)
    seeds = _load_seeds(args.seeds)
    names = [s.strip() for s in args.strategies.split(",") if s.strip()]
    try:
        strategies = [Strategy(n).value for n in names]
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if not strategies:
        raise UsageError("--strategies is empty")
    # Same rng_seed for each strategy; streams are namespaced per purpose.
    all_stats = [run_campaign(_campaign_config(args, cfg, seeds, s)) for s in strategies]
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    write_summary_csv(all_stats, out / "summary.csv")
    _write_manifest(out, "compare", _echo(args))
    print((out / "summary.csv").read_text(), end="")
    return EXIT_OK


def cmd_reduce(args) -> int:
    cfg = _load_cfg(args.cfg)
    files = seed_files(args.seeds)
    if not files:
        raise FileNotFoundError(f"no id_<n>.bin seed files in {args.seeds}")
    corpus = import_corpus_dir(cfg, args.seeds, args.max_steps)
    mode = FeatureMode(args.features)
    instance = cover_instance(corpus, mode)
    if args.algorithm == "randomized":
        result = randomized_cover(instance, Streams(args.seed).generator("shuffle", 0))
    elif args.algorithm == "greedy":
        result = greedy_cover(instance)
    else:
        result = exact_min_cover(instance)
    chosen = list(result.chosen)
    if not chosen and corpus.seeds and not universe(corpus, mode):
        # Nothing to cover; keep one representative so the output stays executable.
        chosen = [0]
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for stale in seed_files(out):
        stale.unlink()
    for seed_id in sorted(chosen):
        shutil.copyfile(files[seed_id], out / files[seed_id].name)
    ratio = 100.0 * len(chosen) / len(corpus)
    print(f"subset {len(chosen)}/{len(corpus)} seeds, subset ratio {ratio:.2f}%")
    return EXIT_OK


def _echo(args) -> dict:
    return {k: v for k, v in sorted(vars(args).items()) if k != "func"}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="randset", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen-target", help="generate a random synthetic target CFG")
    p.add_argument("--nodes", type=_positive, required=True)
    p.add_argument("--max-children", type=_positive, default=3)
    p.add_argument("--loop-back", type=float, default=0.0)
    p.add_argument("--seed", type=_u64, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_gen_target)

    def campaign_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--cfg", required=True)
        p.add_argument("--seeds", required=True)
        p.add_argument("--features", choices=[m.value for m in FeatureMode], default="frontier")
        p.add_argument("--rounds", type=_positive, default=200)
        p.add_argument("--mutants", type=_positive, default=64)
        p.add_argument("--max-steps", type=_positive, default=DEFAULT_MAX_STEPS)
        p.add_argument("--seed", type=_u64, default=0)
        p.add_argument(
            "--clock",
            choices=["virtual", "wall"],
            default="virtual",
            help="virtual: reproducible work units; wall: monotonic microseconds",
        )
        p.add_argument("--out", required=True)

    p = sub.add_parser("run", help="run one scheduling campaign")
    campaign_flags(p)
    p.add_argument("--strategy", choices=[s.value for s in Strategy], default="randset")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("compare", help="run several strategies and summarize")
    campaign_flags(p)
    p.add_argument("--strategies", default="randset,greedy,cullqueue,wrandom")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("reduce", help="distill a seed directory offline")
    p.add_argument("--cfg", required=True)
    p.add_argument("--seeds", required=True)
    p.add_argument("--features", choices=[m.value for m in FeatureMode], default="frontier")
    p.add_argument("--algorithm", choices=["randomized", "greedy", "exact"], default="randomized")
    p.add_argument("--max-steps", type=_positive, default=DEFAULT_MAX_STEPS)
    p.add_argument("--seed", type=_u64, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_reduce)
    return parser


def main(argv: list[str] | None = None) -> int:
    level = os.environ.get("RANDSET_LOG", "error").upper()
    logging.basicConfig(level=getattr(logging, level, logging.ERROR), format="%(levelname)s %(name)s: %(message)s")
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # argparse exits on --help, --version and bad flags; hand the code back.
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"randset: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InfeasibleCoverError as exc:
        print(f"randset: infeasible cover: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except CoverTooLargeError as exc:
        print(f"randset: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, CfgError) as exc:
        print(f"randset: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
