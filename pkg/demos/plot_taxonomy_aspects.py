"""
Six aspects of node mobility
============================

Each aspect is a Pearson correlation between two of a node's quantities:
degree at t1, degree gained by t2, mean neighbour degree at t1 and its change.

"""

from mobtax import ASPECTS, GrowthConfig, generate_ba, taxonomy_trajectory

stream = generate_ba(GrowthConfig(2000, 2, seed=3))
points = taxonomy_trajectory(stream)

"""
One row per t1
--------------

t2 is always the complete network.

"""

print("t1    " + " ".join(f"{a[:10]:>10}" for a in ASPECTS) + "      gini")
for p in points:
    vals = [getattr(p, a) for a in ASPECTS]
    cells = " ".join(f"{v:>10.3f}" if v is not None else f"{'-':>10}" for v in vals)
    print(f"{p.t1_fraction:.1f}   {cells}  {p.gini_t1:8.3f}")
