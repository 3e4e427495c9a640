"""Gini coefficient of the degree distribution and its evolution over time."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike

from ._util import TrajectoryWarning, report
from .edgestream import EdgeStream
from .snapshot import EDGE_FRACTION, NORMALIZED_TIME, CutSpec, snapshots

__all__ = ["EqualityPoint", "TrajectoryWarning", "equality_trajectory", "gini"]


def gini(values: ArrayLike) -> float:
    """Gini coefficient of non-negative values.

    Equals the mean absolute difference over all ordered pairs divided by
    twice the mean, ``sum_ij |x_i - x_j| / (2 n^2 mean(x))``, with no
    small-sample correction. Evaluated in O(n log n) through the sorted-rank
    identity ``sum_ij |x_i - x_j| = 2 sum_i (2i - n - 1) x_(i)``.

    Raises
    ------
    ValueError
        If fewer than two values are given, any value is negative or
        non-finite, or all values are zero.
    """
    xs = np.sort(np.asarray(values, dtype=np.float64).ravel())
    n = len(xs)
    if n < 2:
        raise ValueError(f"gini needs at least 2 values, got {n}")
    if not np.all(np.isfinite(xs)) or xs[0] < 0:
        raise ValueError("gini is defined for finite non-negative values only")
    total = xs.sum()
    if total <= 0:
        raise ValueError("gini is undefined when every value is zero")
    if xs[0] == xs[-1]:
        return 0.0
    ranks = 2.0 * np.arange(1, n + 1) - n - 1
    g = float(np.dot(ranks, xs) / (n * total))
    return max(g, 0.0)


@dataclass(frozen=True)
class EqualityPoint:
    tau: float
    gini: float
    node_count: int


def equality_trajectory(
    stream: EdgeStream,
    n_points: int = 100,
    mode: str = NORMALIZED_TIME,
    issues: list | None = None,
) -> list[EqualityPoint]:
    """Gini of present-node degrees at ``tau = k / n_points``, ``k = 1..n_points``.

    Cuts are in normalized time by default; pass ``mode="edge_fraction"`` to
    space them by edge count instead. Only nodes with at least one edge at
    the cut contribute. Points with fewer than two present nodes are
    skipped, and the skip is appended to ``issues`` (or emitted as a
    :class:`TrajectoryWarning` when ``issues`` is None).
    """
    if n_points < 1:
        raise ValueError("n_points must be >= 1")
    if mode not in (EDGE_FRACTION, NORMALIZED_TIME):
        raise ValueError(f"unknown cut mode {mode!r}")
    taus = [k / n_points for k in range(1, n_points + 1)]
    views = snapshots(stream, [CutSpec(mode, t) for t in taus])
    points = []
    for tau, view in zip(taus, views):
        present = view.degrees[view.degrees > 0]
        if len(present) < 2:
            report(issues, f"tau={tau:g}: only {len(present)} node(s) present, point skipped")
            continue
        points.append(EqualityPoint(tau, gini(present), len(present)))
    return points
