"""
A 3-SAT gadget with a slow hull set
===================================

Each clause becomes three slots of a bipartite gadget. A satisfying
assignment seeds the slot of each true literal; complementary literal pairs
meet at a vertex y, all y's meet at z, and z is infected at time 5. A path
with leaves hung on z stretches this to any k >= 5.
"""

from bootperc.engine import percolate
from bootperc.reduction import CnfFormula, build_reduction, verify_reduction, witness_seed

cnf = CnfFormula(5, ((1, 2, 3), (-2, 4, 5)))
assignment = {1: False, 2: True, 3: False, 4: True, 5: False}

g, gm = build_reduction(cnf, 5)
print(f"{g.n} vertices, {g.m} edges, {len(gm.Y)} conflict vertex")

times = percolate(g, witness_seed(cnf, assignment, gm)).times
slot = gm.slots[0][1]
print("true slot of clause 1:", {role: int(times[v]) for role, v in slot.items()
                                 if role in ("uA", "w", "l", "uB")})
print("z infected at", int(times[gm.z]))

###############################################################################
# Checking every label
# --------------------
# verify_reduction compares each vertex with its intended time and reports
# the failures by role.

for k in (5, 6, 7):
    report = verify_reduction(cnf, assignment, k)
    print(f"k={k}: t={int(report.t)} ok={report.ok}")

###############################################################################
# Two true slots in one clause
# ----------------------------
# With a repeated true literal, each uB of the clause sees two seeded uA's
# and falls at time 1. The overall schedule still ends at z.

twice = CnfFormula(2, ((1, 2, 2), (-1, 2, 2)))
report = verify_reduction(twice, {2: True}, 5)
print("schedule ok:", report.schedule_ok, "| drawn labels ok:", not report.failures("figure"))
for check in report.failures()[:3]:
    print("  ", check.describe())
