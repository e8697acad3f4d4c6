"""3-SAT to bipartite graph gadget whose maximum percolation time reaches k
exactly when the formula is satisfiable (k >= 5).

Per clause and per literal slot the gadget has four core vertices

    uA - uB,  uA - w,  uB - l,  l - w

plus the cross edges uA_a - uB_b (a != b) inside the clause, and a delay
tree on both w and l: a chain host-p1-p2-p3 with a pendant leaf on the host,
on p1 and on p2. Seeding the tree's four leaves infects p2, p1 and (with
one more infected neighbor) the host at times 1, 2 and 3.

Every complementary literal pair gets a vertex y joined to both w's; z is
joined to every y, and z' hangs off z. For k > 5 a path of k - 5 vertices,
each with its own leaf, hangs off z.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Mapping

from bootperc.engine import NEVER, percolate
from bootperc.graph import Graph, is_bipartite

CORE = ("uA", "uB", "w", "l")
W_TREE = ("p1", "p2", "p3", "q0", "q1", "q2")
L_TREE = ("r1", "r2", "r3", "s0", "s1", "s2")
ROLES = CORE + W_TREE + L_TREE
SEEDED_ROLES = ("q0", "q1", "q2", "p3", "s0", "s1", "s2", "r3")


class BadK(ValueError):
    pass


class NotSatisfying(ValueError):
    pass


class CnfFormatError(ValueError):
    def __init__(self, message: str, lineno: int = 0):
        super().__init__(f"line {lineno}: {message}" if lineno else message)
        self.lineno = lineno


@dataclass(frozen=True)
class CnfFormula:
    num_vars: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        for c in self.clauses:
            if len(c) != 3:
                raise ValueError(f"clause {c} does not have exactly 3 literals")
            for lit in c:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ValueError(f"literal {lit} out of range 1..{self.num_vars}")

    def satisfied_by(self, assignment: Mapping[int, bool]) -> bool:
        return all(any(_true(lit, assignment) for lit in c) for c in self.clauses)

    def to_dimacs(self) -> str:
        lines = [f"p cnf {self.num_vars} {len(self.clauses)}"]
        lines += [" ".join(map(str, c)) + " 0" for c in self.clauses]
        return "\n".join(lines) + "\n"


def _true(lit: int, assignment: Mapping[int, bool]) -> bool:
    """A literal of an unassigned variable is not true."""
    v = assignment.get(abs(lit))
    return v is not None and v == (lit > 0)


def parse_dimacs(text: str) -> CnfFormula:
    """DIMACS CNF with exactly three literals per clause (repeats allowed)."""
    header = None
    clauses: list[tuple[int, int, int]] = []
    pending: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            parts = line.split()
            if header is not None:
                raise CnfFormatError("second header", lineno)
            if len(parts) != 4 or parts[1] != "cnf" or not all(p.isdigit() for p in parts[2:]):
                raise CnfFormatError(f"malformed header {line!r}", lineno)
            header = (int(parts[2]), int(parts[3]))
            continue
        if header is None:
            raise CnfFormatError("clause before header", lineno)
        try:
            lits = [int(tok) for tok in line.split()]
        except ValueError:
            raise CnfFormatError(f"unrecognized line {line!r}", lineno) from None
        for lit in lits:
            if lit == 0:
                if len(pending) != 3:
                    raise CnfFormatError(f"clause has {len(pending)} literals, expected 3", lineno)
                clauses.append(tuple(pending))
                pending = []
            elif abs(lit) > header[0]:
                raise CnfFormatError(f"variable {abs(lit)} exceeds {header[0]}", lineno)
            else:
                pending.append(lit)
    if header is None:
        raise CnfFormatError("missing 'p cnf' header")
    if pending:
        raise CnfFormatError("last clause is not terminated by 0")
    if len(clauses) != header[1]:
        raise CnfFormatError(f"header declares {header[1]} clauses, found {len(clauses)}")
    return CnfFormula(header[0], tuple(clauses))


def parse_assignment(text: str) -> dict[int, bool]:
    """One signed variable per line: ``3`` sets x3 true, ``-3`` false."""
    out: dict[int, bool] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(("#", "c")):
            continue
        try:
            lit = int(line)
        except ValueError:
            raise CnfFormatError(f"bad assignment line {line!r}", lineno) from None
        if lit == 0:
            raise CnfFormatError("variable 0", lineno)
        if out.get(abs(lit), lit > 0) != (lit > 0):
            raise CnfFormatError(f"variable {abs(lit)} assigned twice", lineno)
        out[abs(lit)] = lit > 0
    return out


@dataclass
class GadgetMap:
    """Role name to vertex id. ``slots[i][j]`` maps roles of clause i, slot j."""

    slots: list[list[dict[str, int]]]
    Y: dict[tuple[tuple[int, int], tuple[int, int]], int]
    z: int
    z_prime: int
    path: list[int] = field(default_factory=list)
    path_leaves: list[int] = field(default_factory=list)

    @property
    def T(self) -> list[int]:
        return sorted(s[r] for clause in self.slots for s in clause for r in SEEDED_ROLES)

    def to_json(self) -> dict:
        """1-based vertex ids; clause and slot indices are 1-based too."""
        return {
            "clauses": [[{r: v + 1 for r, v in s.items()} for s in clause] for clause in self.slots],
            "Y": [{"pair": [[i + 1, a + 1], [j + 1, b + 1]], "vertex": v + 1}
                  for ((i, a), (j, b)), v in sorted(self.Y.items())],
            "z": self.z + 1,
            "z_prime": self.z_prime + 1,
            "T": [v + 1 for v in self.T],
            "path": [v + 1 for v in self.path],
            "path_leaves": [v + 1 for v in self.path_leaves],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def build_reduction(cnf: CnfFormula, k: int, *, intra_clause: bool = True) -> tuple[Graph, GadgetMap]:
    if k < 5:
        raise BadK(f"the gadget needs k >= 5, got {k}")
    edges: list[tuple[int, int]] = []
    slots: list[list[dict[str, int]]] = []
    nxt = 0
    for _ in cnf.clauses:
        clause = []
        for _ in range(3):
            clause.append({r: nxt + i for i, r in enumerate(ROLES)})
            nxt += len(ROLES)
        for s in clause:
            edges += [(s["uA"], s["uB"]), (s["uA"], s["w"]), (s["uB"], s["l"]), (s["l"], s["w"])]
            for host, (c1, c2, c3, f0, f1, f2) in (("w", W_TREE), ("l", L_TREE)):
                edges += [(s[host], s[c1]), (s[c1], s[c2]), (s[c2], s[c3]),
                          (s[host], s[f0]), (s[c1], s[f1]), (s[c2], s[f2])]
        for a in range(3):
            for b in range(3):
                if a != b:
                    edges.append((clause[a]["uA"], clause[b]["uB"]))
        slots.append(clause)

    keys = [(i, a) for i in range(len(cnf.clauses)) for a in range(3)]
    Y = {}
    for p, (i, a) in enumerate(keys):
        for j, b in keys[p + 1:]:
            if cnf.clauses[i][a] == -cnf.clauses[j][b] and (intra_clause or i != j):
                Y[(i, a), (j, b)] = nxt
                edges += [(nxt, slots[i][a]["w"]), (nxt, slots[j][b]["w"])]
                nxt += 1
    z, z_prime = nxt, nxt + 1
    nxt += 2
    edges += [(z, y) for y in Y.values()] + [(z, z_prime)]

    extra = k - 5
    path = list(range(nxt, nxt + extra))
    leaves = list(range(nxt + extra, nxt + 2 * extra))
    nxt += 2 * extra
    prev = z
    for p, q in zip(path, leaves):
        edges += [(prev, p), (p, q)]
        prev = p
    return Graph(nxt, edges), GadgetMap(slots, Y, z, z_prime, path, leaves)


def true_slots(cnf: CnfFormula, assignment: Mapping[int, bool]) -> list[list[int]]:
    return [[a for a, lit in enumerate(c) if _true(lit, assignment)] for c in cnf.clauses]


def witness_seed(cnf: CnfFormula, assignment: Mapping[int, bool], gm: GadgetMap) -> frozenset[int]:
    """z', the uA of every true literal slot, the delay-tree leaves and the
    leaves on the k > 5 path."""
    if not cnf.satisfied_by(assignment):
        raise NotSatisfying("assignment leaves some clause false")
    seed = {gm.z_prime, *gm.T, *gm.path_leaves}
    for i, slots in enumerate(true_slots(cnf, assignment)):
        seed.update(gm.slots[i][a]["uA"] for a in slots)
    return frozenset(seed)


@dataclass(frozen=True)
class Check:
    role: str
    vertex: int
    expected: int
    actual: float
    source: str  # "schedule" (the correctness argument) or "figure" (gadget drawing labels)

    @property
    def ok(self) -> bool:
        return self.actual == self.expected

    def describe(self) -> str:
        got = "never" if self.actual == NEVER else int(self.actual)
        return f"{self.role} (vertex {self.vertex + 1}): expected {self.expected}, got {got}"


@dataclass
class ReductionReport:
    k: int
    n: int
    bipartite: bool
    percolates: bool
    t: float
    checks: list[Check]

    def failures(self, source: str | None = None) -> list[Check]:
        return [c for c in self.checks if not c.ok and (source is None or c.source == source)]

    @property
    def schedule_ok(self) -> bool:
        return self.bipartite and self.percolates and self.t == self.k and not self.failures("schedule")

    @property
    def ok(self) -> bool:
        return self.schedule_ok and not self.failures()

    def to_json(self) -> dict:
        return {
            "k": self.k, "n": self.n, "bipartite": self.bipartite,
            "percolates": self.percolates, "t": None if self.t == NEVER else int(self.t),
            "schedule_ok": self.schedule_ok, "ok": self.ok,
            "failures": [{"source": c.source, "check": c.describe()} for c in self.failures()],
        }


def expected_times(cnf: CnfFormula, assignment: Mapping[int, bool], gm: GadgetMap,
                   k: int) -> list[tuple[str, int, int, str]]:
    """(role, vertex, expected time, source) for every labeled vertex."""
    out = []
    for i, slots in enumerate(true_slots(cnf, assignment)):
        for a, s in enumerate(gm.slots[i]):
            tag = f"clause {i + 1} slot {a + 1}"
            hot = a in slots
            out.append((f"w {tag}", s["w"], 1 if hot else 3, "schedule"))
            if hot:
                out.append((f"uA {tag}", s["uA"], 0, "schedule"))
            figure = {"l": 2, "uB": 3} if hot else {"l": 3, "uA": 4, "uB": 4}
            figure.update(p1=2, p2=1, p3=0, r1=2, r2=1, r3=0, q0=0, q1=0, q2=0, s0=0, s1=0, s2=0)
            out += [(f"{r} {tag}", s[r], t, "figure") for r, t in figure.items()]
    for ((i, a), (j, b)), y in sorted(gm.Y.items()):
        out.append((f"y ({i + 1},{a + 1})-({j + 1},{b + 1})", y, 4, "schedule"))
    out.append(("z", gm.z, 5, "schedule"))
    out.append(("z'", gm.z_prime, 0, "schedule"))
    for step, p in enumerate(gm.path, start=6):
        out.append((f"path {step - 5}", p, step, "schedule"))
    return out


def verify_reduction(cnf: CnfFormula, assignment: Mapping[int, bool], k: int, *,
                     intra_clause: bool = True) -> ReductionReport:
    """Build the gadget graph, seed it from the assignment and compare every
    vertex time with its intended value."""
    g, gm = build_reduction(cnf, k, intra_clause=intra_clause)
    if not gm.Y:
        raise ValueError("no complementary literal pair: z is disconnected from the gadgets")
    trace = percolate(g, witness_seed(cnf, assignment, gm))
    checks = [Check(role, v, t, trace.times[v], src)
              for role, v, t, src in expected_times(cnf, assignment, gm, k)]
    return ReductionReport(k, g.n, is_bipartite(g) is not None, trace.percolates, trace.t, checks)
