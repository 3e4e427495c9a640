"""
Degree inequality over a network's lifetime
===========================================

A growing network is replayed edge by edge and the Gini coefficient of the
degree sequence is measured at evenly spaced points in time.

"""

import numpy as np

from mobtax import GrowthConfig, generate_ba, generate_uniform, equality_trajectory

# two growth models with the same size and arrival process
ba = generate_ba(GrowthConfig(3000, 2, seed=1))
uniform = generate_uniform(GrowthConfig(3000, 2, seed=1))

"""
Trajectories
------------

Twenty evenly spaced time points; only nodes seen so far count.

"""

for name, stream in [("preferential", ba), ("uniform", uniform)]:
    points = equality_trajectory(stream, n_points=20)
    ginis = np.array([p.gini for p in points])
    print(f"{name:>12}: start {ginis[0]:.3f}  end {ginis[-1]:.3f}  range {np.ptp(ginis):.3f}")
