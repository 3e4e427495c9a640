"""Straight-from-definition reference computations.

Nothing here imports mobtax: these are the independent side of every
equivalence check. Exact rational arithmetic is used wherever the
definition allows it.
"""

from __future__ import annotations

import math
from fractions import Fraction


def gini_double_sum(values) -> float:
    xs = [Fraction(v) for v in values]
    n = len(xs)
    total = sum(abs(a - b) for a in xs for b in xs)
    mean = sum(xs) / n
    return float(total / (2 * n * n * mean))


def pearson_covariance(xs, ys):
    """r = cov(x, y) / (sd(x) sd(y)) with exact moments; None on zero variance."""
    xs = [Fraction(x) for x in xs]
    ys = [Fraction(y) for y in ys]
    n = len(xs)
    mx = sum(xs) / n
    my = sum(ys) / n
    cov = sum((x - mx) * (y - my) for x, y in zip(xs, ys)) / n
    vx = sum((x - mx) ** 2 for x in xs) / n
    vy = sum((y - my) ** 2 for y in ys) / n
    if vx == 0 or vy == 0:
        return None
    return float(cov) / math.sqrt(float(vx) * float(vy))


def simple_edges(raw):
    """Drop loops, stable-sort by time, keep first occurrence of each unordered pair."""
    out, seen = [], set()
    for u, v, t in sorted(raw, key=lambda e: e[2]):
        if u == v:
            continue
        key = frozenset((u, v))
        if key in seen:
            continue
        seen.add(key)
        out.append((u, v))
    return out


def adjacency(edges):
    adj = {}
    for u, v in edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    return adj


def trajectories(edges, k1, k2):
    """node -> (d1, delta_d, n1, delta_n) using the first k1 / k2 edges."""
    a1 = adjacency(edges[:k1])
    a2 = adjacency(edges[:k2])
    out = {}
    for node, nbrs in a1.items():
        d1 = len(nbrs)
        d2 = len(a2[node])
        n1 = Fraction(sum(len(a1[v]) for v in nbrs), d1)
        n2_same_set = Fraction(sum(len(a2[v]) for v in nbrs), d1)
        out[node] = (d1, d2 - d1, n1, n2_same_set - n1)
    return out


ASPECT_INDEX = {
    "mobility": (0, 1),
    "assortativity": (0, 2),
    "philanthropy": (0, 3),
    "community": (1, 2),
    "change_in_assortativity": (1, 3),
    "neighbour_mobility": (2, 3),
}


def taxonomy(edges, k1, k2) -> dict:
    tr = trajectories(edges, k1, k2)
    cols = list(zip(*tr.values()))
    out = {name: pearson_covariance(cols[i], cols[j]) for name, (i, j) in ASPECT_INDEX.items()}
    out["gini_t1"] = gini_double_sum(cols[0])
    out["included_nodes"] = len(tr)
    return out
