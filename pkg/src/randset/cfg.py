"""Control-flow graphs of synthetic targets and their frontier nodes."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Mapping

import numpy as np

from randset.bitmap import Bitmap, NodeBitmap, WidthMismatchError

ENTRY = 0


class CfgError(ValueError):
    pass


class CfgParseError(CfgError):
    pass


@dataclass(frozen=True, eq=True)
class Cfg:
    """Directed control-flow graph with byte-threshold branch rules.

    Edge ids are dense and follow the order of ``edges``. A node with k > 1
    children carries k - 1 strictly increasing thresholds; byte ``b`` selects
    child ``bisect_right(thresholds, b)`` in edge order.
    """

    node_count: int
    edges: tuple[tuple[int, int], ...] = ()
    branch_rules: Mapping[int, tuple[int, ...]] = field(default_factory=dict)

    # derived
    children: tuple[tuple[tuple[int, int], ...], ...] = field(init=False, repr=False, compare=False)
    child_masks: tuple[int, ...] = field(init=False, repr=False, compare=False)
    edge_ids: Mapping[tuple[int, int], int] = field(init=False, repr=False, compare=False)

    __hash__ = None  # type: ignore[assignment]

    def __post_init__(self) -> None:
        n = self.node_count
        if n < 1:
            raise CfgError(f"node_count must be >= 1, got {n}")
        edges = tuple((int(s), int(d)) for s, d in self.edges)
        rules = {int(k): tuple(int(t) for t in v) for k, v in self.branch_rules.items()}
        edge_ids: dict[tuple[int, int], int] = {}
        kids: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for eid, (s, d) in enumerate(edges):
            if not (0 <= s < n and 0 <= d < n):
                raise CfgError(f"edge {eid} ({s}->{d}) references a node outside [0, {n})")
            if (s, d) in edge_ids:
                raise CfgError(f"duplicate edge {s}->{d}")
            edge_ids[(s, d)] = eid
            kids[s].append((d, eid))
        for node, thresholds in rules.items():
            if not 0 <= node < n:
                raise CfgError(f"branch rule for unknown node {node}")
            k = len(kids[node])
            if k <= 1 or len(thresholds) != k - 1:
                raise CfgError(
                    f"node {node} has {k} children but {len(thresholds)} thresholds"
                )
            if any(not 0 <= t <= 255 for t in thresholds):
                raise CfgError(f"node {node} threshold outside [0, 255]")
            if any(a >= b for a, b in zip(thresholds, thresholds[1:])):
                raise CfgError(f"node {node} thresholds not strictly increasing")
        for node, ks in enumerate(kids):
            if len(ks) > 1 and node not in rules:
                raise CfgError(f"node {node} has {len(ks)} children but no branch rule")
        masks = []
        for ks in kids:
            m = 0
            for d, _ in ks:
                m |= 1 << d
            masks.append(m)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "branch_rules", dict(sorted(rules.items())))
        object.__setattr__(self, "children", tuple(tuple(ks) for ks in kids))
        object.__setattr__(self, "child_masks", tuple(masks))
        object.__setattr__(self, "edge_ids", edge_ids)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def successors(self, node: int) -> list[int]:
        return [d for d, _ in self.children[node]]

    def is_leaf(self, node: int) -> bool:
        return not self.children[node]

    def empty_nodes(self) -> NodeBitmap:
        return Bitmap(self.node_count)

    def empty_edges(self) -> Bitmap:
        return Bitmap(self.edge_count)

    def reachable(self) -> NodeBitmap:
        """Nodes reachable from the entry by graph traversal (ignores branch rules)."""
        seen = 1 << ENTRY
        stack = [ENTRY]
        while stack:
            node = stack.pop()
            for d, _ in self.children[node]:
                if not seen >> d & 1:
                    seen |= 1 << d
                    stack.append(d)
        return Bitmap(self.node_count, seen)

    def is_acyclic(self) -> bool:
        indeg = [0] * self.node_count
        for _, d in self.edges:
            indeg[d] += 1
        queue = [i for i, k in enumerate(indeg) if k == 0]
        done = 0
        while queue:
            node = queue.pop()
            done += 1
            for d, _ in self.children[node]:
                indeg[d] -= 1
                if indeg[d] == 0:
                    queue.append(d)
        return done == self.node_count


def build_cfg(layout: Mapping[str, Any]) -> Cfg:
    """Build a validated :class:`Cfg` from a plain mapping.

    ``layout`` holds ``node_count``, ``edges`` (pairs) and optionally
    ``branches`` mapping node -> thresholds.
    """
    try:
        node_count = int(layout["node_count"])
    except (KeyError, TypeError, ValueError) as exc:
        raise CfgError("layout needs an integer node_count") from exc
    edges = [tuple(e) for e in layout.get("edges", ())]
    if any(len(e) != 2 for e in edges):
        raise CfgError("every edge must be a (src, dst) pair")
    branches = {int(k): tuple(v) for k, v in dict(layout.get("branches", {})).items()}
    return Cfg(node_count, tuple(edges), branches)  # type: ignore[arg-type]


def generate_random_cfg(
    node_count: int, max_children: int, loop_back_prob: float, rng_seed: int
) -> Cfg:
    """Generate a CFG where every node is reachable from the entry.

    A random spanning tree rooted at the entry is laid down first, so the
    first child of every branching node points forward; extra forward edges
    and (with ``loop_back_prob``) back edges follow. Zero bytes therefore
    always walk forward, and cyclic graphs cannot trap an all-zero input.
    """
    if node_count < 1:
        raise CfgError("node_count must be >= 1")
    if not 1 <= max_children <= 256:
        raise CfgError("max_children must be in [1, 256]")
    if not 0.0 <= loop_back_prob <= 1.0:
        raise CfgError("loop_back_prob must be a probability")
    rng = np.random.Generator(np.random.Philox(np.random.SeedSequence(rng_seed & (2**64 - 1))))

    kids: list[list[int]] = [[] for _ in range(node_count)]
    open_nodes = [ENTRY]
    for node in range(1, node_count):
        parent = open_nodes[int(rng.integers(len(open_nodes)))]
        kids[parent].append(node)
        if len(kids[parent]) >= max_children:
            open_nodes.remove(parent)
        open_nodes.append(node)

    for node in range(node_count):
        if len(kids[node]) < max_children and node + 1 < node_count and rng.random() < 0.3:
            target = int(rng.integers(node + 1, node_count))
            if target not in kids[node]:
                kids[node].append(target)
        # Back edges only on nodes that already have a forward child, so every
        # node on a cycle is a branch and a zero byte leaves the cycle.
        if kids[node] and len(kids[node]) < max_children and rng.random() < loop_back_prob:
            target = int(rng.integers(0, node + 1))
            if target not in kids[node]:
                kids[node].append(target)

    # Source-major edge order keeps children in insertion order per node.
    edges = []
    for node, ks in enumerate(kids):
        edges.extend((node, d) for d in ks)
    branches = {}
    for node, ks in enumerate(kids):
        if len(ks) > 1:
            picks = rng.choice(np.arange(1, 256), size=len(ks) - 1, replace=False)
            branches[node] = tuple(sorted(int(t) for t in picks))
    return Cfg(node_count, tuple(edges), branches)


def frontier_nodes(cfg: Cfg, visited: NodeBitmap) -> NodeBitmap:
    """Visited nodes that have at least one unvisited child. Leaves never qualify."""
    if visited.width != cfg.node_count:
        raise WidthMismatchError(f"visited width {visited.width} != node_count {cfg.node_count}")
    v = visited.bits
    unvisited = ~v
    out = 0
    masks = cfg.child_masks
    node_bits = v
    while node_bits:
        low = node_bits & -node_bits
        n = low.bit_length() - 1
        if masks[n] & unvisited:
            out |= low
        node_bits ^= low
    return Bitmap(cfg.node_count, out)


def serialize_cfg(cfg: Cfg) -> str:
    lines = [f"cfg {cfg.node_count}"]
    lines += [f"edge {s} {d}" for s, d in cfg.edges]
    for node, thresholds in cfg.branch_rules.items():
        lines.append(f"branch {node} " + " ".join(map(str, thresholds)))
    return "\n".join(lines) + "\n"


def parse_cfg(text: str) -> Cfg:
    node_count: int | None = None
    edges: list[tuple[int, int]] = []
    branches: dict[int, tuple[int, ...]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *rest = line.split()
        try:
            args = [int(x) for x in rest]
        except ValueError as exc:
            raise CfgParseError(f"line {lineno}: non-integer argument") from exc
        if head == "cfg":
            if node_count is not None or len(args) != 1:
                raise CfgParseError(f"line {lineno}: bad or repeated header")
            node_count = args[0]
        elif node_count is None:
            raise CfgParseError(f"line {lineno}: '{head}' before 'cfg' header")
        elif head == "edge":
            if len(args) != 2:
                raise CfgParseError(f"line {lineno}: edge needs src and dst")
            edges.append((args[0], args[1]))
        elif head == "branch":
            if len(args) < 2:
                raise CfgParseError(f"line {lineno}: branch needs a node and thresholds")
            if args[0] in branches:
                raise CfgParseError(f"line {lineno}: repeated branch for node {args[0]}")
            branches[args[0]] = tuple(args[1:])
        else:
            raise CfgParseError(f"line {lineno}: unknown directive '{head}'")
    if node_count is None:
        raise CfgParseError("missing 'cfg <node_count>' header")
    try:
        return Cfg(node_count, tuple(edges), branches)
    except CfgError as exc:
        raise CfgParseError(str(exc)) from exc
