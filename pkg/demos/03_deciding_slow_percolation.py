"""
Deciding t(G) >= 3 and t(G) >= 4 without enumeration
====================================================

The deciders fix a vertex u, seed everything that is forced or far from u,
and search a bounded extra set F. A hit is returned as a witness whose seed
can be replayed.
"""

import json
import random

from bootperc.corpus import random_connected_bipartite
from bootperc.deciders import decide_bip3, decide_bip4, decide_gen3, replay
from bootperc.graph import cycle_graph, delay_tree
from bootperc.oracle import brute_force_t

t8, t10 = delay_tree(3), delay_tree(4)

ok, w = decide_gen3(t8)
print("t(G) >= 3 on the delay tree:", ok)
print(json.dumps(w.to_json()))
print("replays:", replay(t8, w))

print("bipartite test agrees:", decide_bip3(t8)[0], "| C6:", decide_bip3(cycle_graph(6))[0])

ok, w = decide_bip4(t10)
print("t(G) >= 4 on the longer tree:", ok, "with vertex", w.x + 1, "infected at time 4")

###############################################################################
# Against the oracle
# ------------------
# A few random sparse bipartite graphs, compared with exhaustive search.

rng = random.Random(1)
for _ in range(8):
    g = random_connected_bipartite(rng.randint(7, 12), rng, p=0.1)
    print(f"n={g.n:2d} m={g.m:2d}  oracle t={brute_force_t(g)}  "
          f"bip3={decide_bip3(g)[0]!s:5}  bip4={decide_bip4(g)[0]}")
