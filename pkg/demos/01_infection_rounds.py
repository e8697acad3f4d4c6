"""
Infection rounds on small graphs
================================

A vertex becomes infected once two of its neighbors are. Seeds are infected
at time 0 and every round is applied to all vertices at once.
"""

from bootperc.engine import NEVER, percolate, reduce_time, rounds
from bootperc.graph import cycle_graph, delay_tree, path_graph

# opposite corners of a 4-cycle infect the other two in one round
c4 = cycle_graph(4)
print(percolate(c4, {0, 2}).times)

# the ends of a path are not enough: the inner vertices see one infected
# neighbor each, forever
p4 = path_graph(4)
trace = percolate(p4, {0, 3})
print(trace.times, "percolates:", trace.percolates)
assert trace.times[1] == NEVER

###############################################################################
# A slow spreader
# ---------------
# The delay tree is a path with a pendant leaf on all but its last vertex.
# Leaves must be seeded, and seeding just the leaves lets the infection
# crawl down the path one vertex per round.

tree = delay_tree(3)
leaves = {v for v in range(tree.n) if tree.degree(v) == 1}
trace = percolate(tree, leaves)
print("times:", trace.times, "t =", trace.t)

for k, infected in enumerate(rounds(tree, leaves)):
    print(f"after round {k}: {sorted(infected)}")

###############################################################################
# Shaving off rounds
# ------------------
# Adding every round-1 vertex to the seed removes exactly one round. Doing it
# repeatedly walks the percolation time down to 0.

seed = frozenset(leaves)
while percolate(tree, seed).t > 0:
    seed = reduce_time(tree, seed)
    print(f"seed of size {len(seed)} percolates in {percolate(tree, seed).t}")
