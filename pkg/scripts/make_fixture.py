"""Write a fixture target and seed directory for use with the ``randset`` CLI."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from _config import parse_config

from randset.cfg import serialize_cfg
from randset.fixtures import duplicated_fixture, distill_fixture, plateau_fixture

BUILDERS = {
    "plateau": lambda: plateau_fixture(30, 5),
    "duplicated": lambda: duplicated_fixture(5, 20),
    "distill": distill_fixture,
}


@dataclass(frozen=True)
class FixtureConfig:
    kind: str = "plateau"
    out: str = "fixture"


def main(argv=None) -> None:
    conf = parse_config(FixtureConfig, __doc__, argv)
    if conf.kind not in BUILDERS:
        raise SystemExit(f"unknown kind {conf.kind!r}; choose from {', '.join(BUILDERS)}")
    cfg, seeds = BUILDERS[conf.kind]()
    out = Path(conf.out)
    seed_dir = out / "seeds"
    seed_dir.mkdir(parents=True, exist_ok=True)
    (out / "target.cfg").write_text(serialize_cfg(cfg))
    for i, s in enumerate(seeds):
        (seed_dir / f"id_{i}.bin").write_bytes(s)
    print(f"wrote {out / 'target.cfg'} and {len(seeds)} seeds under {seed_dir}")


if __name__ == "__main__":
    main()
