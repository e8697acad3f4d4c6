"""
From witness to hull set
========================

A witness seed infects one vertex late but usually does not infect the whole
graph. The constructors add vertices one at a time, each far enough from the
late vertex that it stays late, until everything is infected.
"""

import random

from bootperc.constructors import extend, find_small_certificate
from bootperc.corpus import random_connected_bipartite
from bootperc.deciders import decide_bip4
from bootperc.engine import percolate
from bootperc.graph import delay_tree

rng = random.Random(3)
while True:
    g = random_connected_bipartite(11, rng, p=0.1)
    ok, w = decide_bip4(g)
    if ok and not percolate(g, w.base_seed).percolates:
        break

trace = percolate(g, w.base_seed)
print(f"witness seed: {len(w.base_seed)} vertices, {len(trace.infected)} of {g.n} infected")

hull = extend(g, w)
trace = percolate(g, hull)
print(f"extended:     {len(hull)} vertices, percolates={trace.percolates}, t={trace.t}")

###############################################################################
# Small certificates
# ------------------
# A vertex infected at time 3 (resp. 4) by some hull set is infected at that
# time by a seed of at most 4 (resp. 8) vertices near it.

tree = delay_tree(4)
f = find_small_certificate(tree, 0, 4, 8)
print("certificate for time 4 at the root:", sorted(f))
print("time of the root under it:", percolate(tree, f).times[0])
