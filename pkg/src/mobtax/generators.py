"""Synthetic growing networks: preferential attachment and rank-based attachment.

Both models start from a clique of ``m + 1`` nodes and then add one node at a
time, each joining ``m`` distinct existing nodes. Edge timestamps are the
integers 1, 2, 3, ... in creation order and node labels are arrival indices
``"0", "1", ...``.
"""

from __future__ import annotations

import bisect
import itertools
import random
from dataclasses import dataclass
from typing import Callable

from .edgestream import EdgeStream, stream_from_pairs

__all__ = ["GrowthConfig", "generate_ba", "generate_fortunato", "generate_uniform"]


@dataclass(frozen=True)
class GrowthConfig:
    n_nodes: int
    m: int = 2
    alpha: float = 1.0
    seed: int | None = None

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"m must be >= 1, got {self.m}")
        if self.n_nodes <= self.m:
            raise ValueError(f"n_nodes must exceed m, got n_nodes={self.n_nodes}, m={self.m}")
        if not self.alpha > 0:
            raise ValueError(f"alpha must be positive, got {self.alpha}")


def _grow(config: GrowthConfig, pick: Callable[[random.Random, int], int], on_edge=None) -> EdgeStream:
    rng = random.Random(config.seed)
    m = config.m
    edges = [(i, j) for i in range(m + 1) for j in range(i + 1, m + 1)]
    if on_edge:
        for i, j in edges:
            on_edge(i, j)
    for new in range(m + 1, config.n_nodes):
        chosen: list[int] = []
        while len(chosen) < m:
            t = pick(rng, new)
            if t not in chosen:
                chosen.append(t)
        for t in chosen:
            edges.append((new, t))
            if on_edge:
                on_edge(new, t)
    return stream_from_pairs((s, t, ts) for ts, (s, t) in enumerate(edges, start=1))


def generate_ba(config: GrowthConfig) -> EdgeStream:
    """Barabási–Albert growth: targets are drawn with probability proportional to degree.

    The ``m`` targets of one arrival are drawn without replacement, with
    degrees frozen until the arrival completes.
    """
    # one entry per edge end; _grow reports an arrival's edges only after
    # all of its targets are chosen
    ends: list[int] = []

    def on_edge(u: int, v: int) -> None:
        ends.append(u)
        ends.append(v)

    return _grow(config, lambda rng, new: ends[rng.randrange(len(ends))], on_edge)


def generate_fortunato(config: GrowthConfig) -> EdgeStream:
    """Rank-based growth: the node with arrival rank ``r`` (1-based) is chosen
    with probability proportional to ``r ** -alpha``, regardless of degree."""
    weights = (r ** -config.alpha for r in range(1, config.n_nodes + 1))
    cum = list(itertools.accumulate(weights))

    def pick(rng: random.Random, new: int) -> int:
        u = rng.random() * cum[new - 1]
        return min(bisect.bisect_right(cum, u, 0, new), new - 1)

    return _grow(config, pick)


def generate_uniform(config: GrowthConfig) -> EdgeStream:
    """Control model: every existing node is equally likely to be chosen."""
    return _grow(config, lambda rng, new: rng.randrange(new))
