"""
Exhaustive maximum percolation time
===================================

For graphs up to about 20 vertices every seed set can be tried. The oracle
skips seeds that miss a leaf, since a leaf can never be infected from its
single neighbor.
"""

import numpy as np

from bootperc.graph import cycle_graph, delay_tree, path_graph
from bootperc.oracle import brute_force, is_co_convex, percolation_table

for name, g in [("C4", cycle_graph(4)), ("P4", path_graph(4)), ("C6", cycle_graph(6)),
                ("delay tree 3", delay_tree(3)), ("delay tree 4", delay_tree(4))]:
    t, seed = brute_force(g)
    print(f"{name:>12}: t(G) = {t}, least seed {sorted(seed)}")

###############################################################################
# Every time up to the maximum is reachable
# -----------------------------------------
# The table holds the percolation time of each seed mask, -1 where it fails.

tree = delay_tree(4)
table = percolation_table(tree)
times, counts = np.unique(table[table >= 0], return_counts=True)
for t, c in zip(times, counts):
    print(f"{c:4d} hull sets percolate in {t} rounds")

###############################################################################
# Co-convex sets
# --------------
# If every vertex of T has at most one neighbor outside T, infection can never
# enter T from outside, so every hull set must contain a vertex of T.

p4 = path_graph(4)
print(is_co_convex(p4, {1, 2}), is_co_convex(cycle_graph(4), {1}))
hulls = np.flatnonzero(percolation_table(p4) >= 0)
print("every P4 hull set meets {1, 2}:", bool(np.all(hulls & 0b0110)))
