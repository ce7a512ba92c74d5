"""
Independent sets in random maximal LGGs, and edge-count scaling
===============================================================

Any LGG on n points contains an independent set of about sqrt(n)/2
vertices: take a longest monotone subsequence (length >= sqrt(n)) and
peel terminal vertices, each of which has degree at most one.
"""

import math
import random

from lgg import (
    PointSet,
    GridParams,
    build,
    independent_set,
    longest_monotone_subsequence,
    neighborhood_coloring,
    random_maximal_lgg,
)
from lgg.cli import ScalingSample, fit_exponent

# A seeded random maximal LGG: insert candidate pairs in a pseudorandom
# order, keeping every edge that conflicts with nothing inserted so far.
rng = random.Random(1)
raw = set()
while len(raw) < 900:
    raw.add((rng.randrange(2**20), rng.randrange(2**20)))
ps = PointSet.of(sorted(raw))
g = random_maximal_lgg(ps, seed=2024)
print(f"maximal LGG on 900 points: {len(g.edges)} edges")

seq = longest_monotone_subsequence(ps)
print(f"longest monotone subsequence: {len(seq.indices)}"
      f" ({seq.direction.value}), sqrt(n) = {math.sqrt(900):.1f}")

res = independent_set(g)
print(f"independent set: {len(res.vertices)} vertices"
      f" (guarantee {res.guarantee}, via {res.method.value})")

# Neighborhoods in an LGG induce subgraphs of maximum degree 3, so four
# colors always suffice around any vertex.
worst = max(
    max(neighborhood_coloring(g, u).values()) for u in range(g.n)
)
print(f"largest color index over all neighborhoods: {worst} (of at most 3)")

# Edge counts of the grid construction grow superlinearly; fit the
# exponent from a few grid sizes.
samples = []
for side in (30, 60, 90, 120):
    graph, stats = build(GridParams(g=side))
    samples.append(ScalingSample(graph.n, stats.total_edges))
    print(f"grid g={side:3d}: n={graph.n:5d}, edges={stats.total_edges}")
fit = fit_exponent(samples)
print(f"log-log fit: edges ~ n^{fit.slope:.3f}  (r^2 = {fit.r_squared:.5f})")
