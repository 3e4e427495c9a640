"""Six-aspect hierarchical mobility taxonomy between two cuts of a growing graph.

For every node present at ``t1`` four quantities are tracked:

``d1``
    degree at ``t1``
``delta_d``
    degree gained between ``t1`` and ``t2``
``n1``
    mean degree of its ``t1`` neighbours, at ``t1``
``delta_n``
    gain in mean degree of that same ``t1`` neighbour set by ``t2``

The six aspects are Pearson correlations between pairs of these:

=========================  ======================
aspect                     pair
=========================  ======================
mobility                   (d1, delta_d)
assortativity              (d1, n1)
philanthropy               (d1, delta_n)
community                  (delta_d, n1)
change_in_assortativity    (delta_d, delta_n)
neighbour_mobility         (n1, delta_n)
=========================  ======================

A high ``mobility`` value means a *static* hierarchy: nodes that are already
well connected gain the most.
"""

from __future__ import annotations

import math
from dataclasses import astuple, dataclass
from typing import Sequence

import numpy as np
from numpy.typing import ArrayLike

from .edgestream import EdgeStream
from ._util import report
from .equality import gini
from .snapshot import CutSpec, SnapshotView, edge_fraction, neighbour_degree_sums, snapshots

__all__ = [
    "ASPECTS",
    "ASPECT_PAIRS",
    "DEFAULT_T1_FRACTIONS",
    "FEATURE_NAMES",
    "NodeTrajectory",
    "TaxonomyPoint",
    "node_trajectories",
    "pearson",
    "taxonomy_point",
    "taxonomy_trajectory",
]

ASPECT_PAIRS = {
    "mobility": ("d1", "delta_d"),
    "assortativity": ("d1", "n1"),
    "philanthropy": ("d1", "delta_n"),
    "community": ("delta_d", "n1"),
    "change_in_assortativity": ("delta_d", "delta_n"),
    "neighbour_mobility": ("n1", "delta_n"),
}
ASPECTS = tuple(ASPECT_PAIRS)
FEATURE_NAMES = ASPECTS + ("gini_t1",)
DEFAULT_T1_FRACTIONS = tuple(k / 10 for k in range(1, 10))


def pearson(xs: ArrayLike, ys: ArrayLike) -> float | None:
    """Product-moment correlation of two equal-length series.

    Returns None (undefined) when either series is constant.

    Raises
    ------
    ValueError
        If lengths differ or are below 2.
    """
    x = np.asarray(xs, dtype=np.float64).ravel()
    y = np.asarray(ys, dtype=np.float64).ravel()
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    if len(x) < 2:
        raise ValueError("pearson needs at least 2 observations")
    if np.all(x == x[0]) or np.all(y == y[0]):
        return None
    dx = x - x.mean()
    dy = y - y.mean()
    sxx = float(np.dot(dx, dx))
    syy = float(np.dot(dy, dy))
    if sxx == 0.0 or syy == 0.0:
        return None
    r = float(np.dot(dx, dy)) / math.sqrt(sxx * syy)
    return min(1.0, max(-1.0, r))


@dataclass(frozen=True)
class NodeTrajectory:
    d1: int
    delta_d: int
    n1: float
    delta_n: float


@dataclass(frozen=True)
class _Trajectories:
    nodes: np.ndarray
    d1: np.ndarray
    delta_d: np.ndarray
    n1: np.ndarray
    delta_n: np.ndarray


def _trajectories(v1: SnapshotView, v2: SnapshotView, neighbour_set: str = "t1") -> _Trajectories:
    if v1.included_edges > v2.included_edges:
        raise ValueError("t1 cut must not include more edges than t2 cut")
    nodes = v1.nodes
    if len(nodes) < 2:
        raise ValueError(f"only {len(nodes)} node(s) present at t1")
    d1 = v1.degrees[nodes]
    d2 = v2.degrees[nodes]
    s1 = neighbour_degree_sums(v1)[nodes]
    if neighbour_set == "t1":
        # integer sums keep equal rationals bit-identical after division
        delta_n = (neighbour_degree_sums(v1, v2.degrees)[nodes] - s1) / d1
    elif neighbour_set == "t2":
        delta_n = neighbour_degree_sums(v2)[nodes] / d2 - s1 / d1
    else:
        raise ValueError(f"neighbour_set must be 't1' or 't2', got {neighbour_set!r}")
    return _Trajectories(nodes, d1, d2 - d1, s1 / d1, delta_n)


def node_trajectories(
    stream: EdgeStream, t1: CutSpec, t2: CutSpec, neighbour_set: str = "t1"
) -> dict[str, NodeTrajectory]:
    """Per-node ``(d1, delta_d, n1, delta_n)`` keyed by original node label.

    Only nodes present at ``t1`` appear. ``delta_n`` re-reads the ``t1``
    neighbour set at ``t2``; ``neighbour_set="t2"`` instead compares against
    the mean degree of the node's ``t2`` neighbours.
    """
    v1, v2 = snapshots(stream, [t1, t2])
    tr = _trajectories(v1, v2, neighbour_set)
    labels = stream.labels
    return {
        labels[u]: NodeTrajectory(int(a), int(b), float(c), float(d))
        for u, a, b, c, d in zip(tr.nodes, tr.d1, tr.delta_d, tr.n1, tr.delta_n)
    }


@dataclass(frozen=True)
class TaxonomyPoint:
    """The six aspects plus the Gini of ``t1`` degrees. None marks an undefined correlation."""

    t1_fraction: float
    mobility: float | None
    assortativity: float | None
    philanthropy: float | None
    community: float | None
    change_in_assortativity: float | None
    neighbour_mobility: float | None
    gini_t1: float
    included_nodes: int

    def features(self) -> tuple:
        return tuple(getattr(self, name) for name in FEATURE_NAMES)

    @property
    def is_complete(self) -> bool:
        return all(v is not None for v in self.features())

    def as_tuple(self) -> tuple:
        return astuple(self)


def _point(v1: SnapshotView, v2: SnapshotView, t1_fraction: float, neighbour_set: str) -> TaxonomyPoint:
    tr = _trajectories(v1, v2, neighbour_set)
    aspects = {
        name: pearson(getattr(tr, a), getattr(tr, b)) for name, (a, b) in ASPECT_PAIRS.items()
    }
    return TaxonomyPoint(
        t1_fraction=t1_fraction,
        gini_t1=gini(tr.d1),
        included_nodes=len(tr.nodes),
        **aspects,
    )


def taxonomy_point(
    stream: EdgeStream, t1: CutSpec, t2: CutSpec | None = None, neighbour_set: str = "t1"
) -> TaxonomyPoint:
    """Taxonomy between cuts ``t1`` and ``t2`` (default: the full graph)."""
    t2 = t2 or edge_fraction(1.0)
    v1, v2 = snapshots(stream, [t1, t2])
    return _point(v1, v2, t1.value, neighbour_set)


def taxonomy_trajectory(
    stream: EdgeStream,
    t1_fractions: Sequence[float] = DEFAULT_T1_FRACTIONS,
    issues: list | None = None,
    neighbour_set: str = "t1",
) -> list[TaxonomyPoint]:
    """Taxonomy points at edge-fraction cuts ``t1_fractions`` against the full graph.

    Requires at least 10 edges. Fractions whose cuts land on the same edge
    count as an earlier fraction are merged into it, cuts that already hold
    every edge are dropped, and points that cannot be computed are skipped;
    each of these events goes to ``issues`` (or is emitted as a warning).
    """
    fr = [float(f) for f in t1_fractions]
    if not fr:
        raise ValueError("t1_fractions is empty")
    if any(not 0 < f < 1 for f in fr) or any(b <= a for a, b in zip(fr, fr[1:])):
        raise ValueError("t1_fractions must be strictly increasing within (0, 1)")
    if stream.edge_count < 10:
        raise ValueError(f"taxonomy trajectory needs at least 10 edges, got {stream.edge_count}")

    views = snapshots(stream, [edge_fraction(f) for f in fr] + [edge_fraction(1.0)])
    full = views.pop()
    points = []
    used: dict[int, float] = {}
    for f, view in zip(fr, views):
        k = view.included_edges
        if k in used:
            report(issues, f"t1={f:g} selects the same {k} edges as t1={used[k]:g}; merged")
            continue
        used[k] = f
        if k >= full.included_edges:
            report(issues, f"t1={f:g} already includes every edge; skipped")
            continue
        try:
            points.append(_point(view, full, f, neighbour_set))
        except ValueError as exc:
            report(issues, f"t1={f:g}: {exc}")
    return points
