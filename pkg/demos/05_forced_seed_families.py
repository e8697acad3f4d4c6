"""
Forced seed families
====================

Some vertices must be in every hull set: leaves, one vertex of every pocket
(a component hanging entirely inside one vertex's neighborhood) and one end
of every edge between two degree-2 vertices. The decider for t(G) >= 4 tries
a linear-size family of such sets.
"""

from bootperc.families import degree_one_set, gamma_family, mpq, representative_t0u
from bootperc.graph import Graph, path_graph

p5 = path_graph(5)
print("leaves of P5:", sorted(degree_one_set(p5)))
print("pocket representatives for the middle vertex:", sorted(representative_t0u(p5, 2)))

###############################################################################
# Degree-2 paths
# --------------
# Around a vertex v next to u, every induced path v-x-y through two degree-2
# vertices is recorded with x on the near side and y on the far side. Two x's
# can share their y.

g = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 1)])
part = mpq(g, 0, 1)
print("near:", sorted(part.P), "far:", sorted(part.Q), "pairs:", part.pairs())

###############################################################################
# The family for one vertex

g = Graph(8, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 5), (5, 6), (6, 7), (1, 6)])
for member in gamma_family(g, 0):
    print(member.describe(), sorted(member.members))
