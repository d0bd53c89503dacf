"""Deterministic execution of byte inputs over a :class:`Cfg`."""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass

from randset.bitmap import Bitmap, EdgeBitmap, NodeBitmap
from randset.cfg import ENTRY, Cfg

DEFAULT_MAX_STEPS = 4096


@dataclass(frozen=True)
class Trace:
    nodes: NodeBitmap
    edges: EdgeBitmap
    steps: int

    @property
    def cost(self) -> int:
        return self.steps


def execute(cfg: Cfg, data: bytes, max_steps: int = DEFAULT_MAX_STEPS) -> Trace:
    """Walk ``cfg`` from the entry, consuming one input byte per branch.

    Bytes past the end of ``data`` read as zero. One-child nodes are followed
    without consuming input. The walk stops at a leaf or after ``max_steps``
    transitions.
    """
    if max_steps < 1:
        raise ValueError("max_steps must be >= 1")
    children = cfg.children
    rules = cfg.branch_rules
    size = len(data)
    node = ENTRY
    cursor = 0
    nodes = 1 << ENTRY
    edges = 0
    steps = 0
    while steps < max_steps:
        kids = children[node]
        if not kids:
            break
        if len(kids) == 1:
            child, eid = kids[0]
        else:
            byte = data[cursor] if cursor < size else 0
            cursor += 1
            child, eid = kids[bisect_right(rules[node], byte)]
        edges |= 1 << eid
        nodes |= 1 << child
        node = child
        steps += 1
    return Trace(Bitmap(cfg.node_count, nodes), Bitmap(cfg.edge_count, edges), steps)
