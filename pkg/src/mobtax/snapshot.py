"""Cumulative graph state at a cut point of an :class:`~mobtax.edgestream.EdgeStream`."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .edgestream import EdgeStream

__all__ = [
    "EDGE_FRACTION",
    "NORMALIZED_TIME",
    "CutSpec",
    "SnapshotView",
    "edge_fraction",
    "included_edge_count",
    "mean_neighbour_degree",
    "neighbour_degree_sums",
    "normalized_time",
    "snapshot",
    "snapshots",
]

EDGE_FRACTION = "edge_fraction"
NORMALIZED_TIME = "normalized_time"

# absorbs binary rounding in products like (2/3) * 6
_FLOOR_EPS = 1e-9


@dataclass(frozen=True)
class CutSpec:
    mode: str
    value: float

    def __post_init__(self):
        if self.mode not in (EDGE_FRACTION, NORMALIZED_TIME):
            raise ValueError(f"unknown cut mode {self.mode!r}")
        if not 0 < self.value <= 1:
            raise ValueError(f"cut value must lie in (0, 1], got {self.value}")


def edge_fraction(value: float) -> CutSpec:
    return CutSpec(EDGE_FRACTION, value)


def normalized_time(value: float) -> CutSpec:
    return CutSpec(NORMALIZED_TIME, value)


def included_edge_count(stream: EdgeStream, cut: CutSpec) -> int:
    """Number of leading stream edges that a cut keeps.

    Edge-fraction cuts keep ``floor(value * edge_count)`` edges, at least one.
    Normalized-time cuts keep every edge with timestamp
    ``<= t_min + value * (t_max - t_min)``.
    """
    n = stream.edge_count
    if cut.mode == EDGE_FRACTION:
        k = max(1, math.floor(cut.value * n + _FLOOR_EPS))
        return min(k, n)
    if cut.value == 1 or stream.t_max == stream.t_min:
        return n
    threshold = stream.t_min + cut.value * (stream.t_max - stream.t_min)
    k = int(np.searchsorted(stream.timestamps, threshold, side="right"))
    if k == 0:
        raise ValueError(f"cut {cut} includes no edges")
    return k


@dataclass(frozen=True, eq=False)
class SnapshotView:
    """Graph made of the first ``included_edges`` edges of a stream.

    ``degrees`` spans every node of the parent stream; nodes that have not
    arrived yet have degree 0 and are not *present*.
    """

    stream: EdgeStream
    included_edges: int
    degrees: np.ndarray

    @property
    def sources(self) -> np.ndarray:
        return self.stream.sources[: self.included_edges]

    @property
    def targets(self) -> np.ndarray:
        return self.stream.targets[: self.included_edges]

    @cached_property
    def nodes(self) -> np.ndarray:
        return np.flatnonzero(self.degrees)

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        adj: dict[int, set[int]] = {int(u): set() for u in self.nodes}
        for u, v in zip(self.sources.tolist(), self.targets.tolist()):
            adj[u].add(v)
            adj[v].add(u)
        return {u: frozenset(vs) for u, vs in adj.items()}

    def degree(self, node: int | str) -> int:
        return int(self.degrees[self._resolve(node)])

    def degree_map(self) -> dict[str, int]:
        labels = self.stream.labels
        return {labels[u]: int(self.degrees[u]) for u in self.nodes}

    def _resolve(self, node: int | str) -> int:
        idx = self.stream.index_of(node) if isinstance(node, str) else int(node)
        if not 0 <= idx < len(self.degrees) or self.degrees[idx] == 0:
            raise KeyError(f"node {node!r} is not present in this snapshot")
        return idx


def _degrees(stream: EdgeStream, k: int) -> np.ndarray:
    n = stream.node_count
    return np.bincount(stream.sources[:k], minlength=n) + np.bincount(stream.targets[:k], minlength=n)


def snapshot(stream: EdgeStream, cut: CutSpec) -> SnapshotView:
    k = included_edge_count(stream, cut)
    deg = _degrees(stream, k)
    deg.setflags(write=False)
    return SnapshotView(stream, k, deg)


def snapshots(stream: EdgeStream, cuts: Sequence[CutSpec]) -> list[SnapshotView]:
    """Materialize several cuts in one pass over the stream.

    Views come back in the order of ``cuts``; internally degrees are
    accumulated from the smallest cut upward.
    """
    counts = [included_edge_count(stream, c) for c in cuts]
    n = stream.node_count
    deg = np.zeros(n, dtype=np.int64)
    done = 0
    by_count: dict[int, SnapshotView] = {}
    for k in sorted(set(counts)):
        deg = deg + np.bincount(stream.sources[done:k], minlength=n)
        deg += np.bincount(stream.targets[done:k], minlength=n)
        done = k
        frozen = deg.copy()
        frozen.setflags(write=False)
        by_count[k] = SnapshotView(stream, k, frozen)
    return [by_count[k] for k in counts]


def neighbour_degree_sums(view: SnapshotView, degrees: np.ndarray | None = None) -> np.ndarray:
    """For every node, the sum of ``degrees`` over its neighbours in ``view``.

    ``degrees`` defaults to the view's own degrees; passing the degrees of a
    later snapshot re-reads the same neighbour sets at that later time.
    """
    deg = view.degrees if degrees is None else np.asarray(degrees)
    n = len(view.degrees)
    src, dst = view.sources, view.targets
    sums = np.bincount(src, weights=deg[dst], minlength=n)
    sums += np.bincount(dst, weights=deg[src], minlength=n)
    return sums


def mean_neighbour_degree(view: SnapshotView, node: int | str) -> float:
    """Average degree of the neighbours of ``node`` in ``view``.

    ``node`` may be a dense index or an original label.
    """
    u = view._resolve(node)
    return sum(int(view.degrees[v]) for v in view.adjacency[u]) / int(view.degrees[u])
