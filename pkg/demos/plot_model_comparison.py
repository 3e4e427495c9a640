"""
Rich get richer, or old get richer?
===================================

Preferential attachment rewards degree; the age-based model rewards early
arrival.  Both make early high-degree nodes gain the most, so mobility alone
separates them less than one might expect.

"""

import statistics

from mobtax import GrowthConfig, edge_fraction, generate_ba, generate_fortunato, taxonomy_point

for alpha in (0.5, 1.0, 2.0):
    ba, fo = [], []
    for seed in range(10):
        cfg = GrowthConfig(3000, 2, alpha=alpha, seed=seed)
        ba.append(taxonomy_point(generate_ba(cfg), edge_fraction(0.5)).mobility)
        fo.append(taxonomy_point(generate_fortunato(cfg), edge_fraction(0.5)).mobility)
    print(f"alpha={alpha}: median mobility  ba {statistics.median(ba):.3f}  age-based {statistics.median(fo):.3f}")
