"""
A landscape of growing networks
===============================

Taxonomy points from several synthetic networks are pooled, standardised and
projected onto their first two principal components.  Each network leaves a
trail through the plane as t1 advances.

"""

import numpy as np

from mobtax import (
    FEATURE_NAMES,
    FeatureMatrix,
    GrowthConfig,
    generate_ba,
    generate_fortunato,
    generate_uniform,
    pca_project,
    taxonomy_trajectory,
    trails,
)

models = {"ba": generate_ba, "fortunato": generate_fortunato, "uniform": generate_uniform}
pooled = []
for name, gen in models.items():
    for seed in range(3):
        stream = gen(GrowthConfig(1500, 2, seed=seed))
        pooled += [(f"{name}{seed}", p) for p in taxonomy_trajectory(stream)]

result = pca_project(FeatureMatrix.from_points(pooled))

"""
Loadings
--------

"""

print("explained variance:", np.round(result.explained_variance_ratio[:2], 3))
for name, (a, b) in zip(FEATURE_NAMES, result.components.T):
    print(f"{name:>24} {a:+.3f} {b:+.3f}")

"""
Trails
------

"""

for dataset, trail in trails(result).items():
    start, end = trail[0], trail[-1]
    print(f"{dataset:>11}: ({start[1]:+.2f}, {start[2]:+.2f}) -> ({end[1]:+.2f}, {end[2]:+.2f})")
