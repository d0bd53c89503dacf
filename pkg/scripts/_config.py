"""Tiny bridge from a dataclass config to argparse flags."""

from __future__ import annotations

import argparse
import dataclasses


def parse_config(cls, description: str, argv=None):
    parser = argparse.ArgumentParser(description=description)
    for f in dataclasses.fields(cls):
        flag = "--" + f.name.replace("_", "-")
        default = f.default if f.default is not dataclasses.MISSING else f.default_factory()
        if isinstance(default, tuple):
            parser.add_argument(flag, type=type(default[0]), nargs="+", default=default)
        else:
            parser.add_argument(flag, type=type(default), default=default)
    ns = parser.parse_args(argv)
    return cls(**{k: tuple(v) if isinstance(v, list) else v for k, v in vars(ns).items()})
