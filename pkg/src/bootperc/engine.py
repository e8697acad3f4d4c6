"""The 2-neighbor infection process on a fixed graph.

``NEVER`` is ``math.inf``: it orders above every finite time, so a check
like ``time >= k`` holds for vertices that are never infected.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from bootperc.graph import Graph

NEVER = math.inf


class NotAHullSet(ValueError):
    pass


class AlreadyTimeZero(ValueError):
    pass


def _check_seed(g: Graph, seed: Iterable[int]) -> frozenset[int]:
    s = frozenset(seed)
    bad = [v for v in s if not 0 <= v < g.n]
    if bad:
        raise ValueError(f"seed vertices out of range: {sorted(bad)}")
    return s


@dataclass(frozen=True)
class InfectionTrace:
    """Infection time of every vertex for one seed set."""

    seed: frozenset[int]
    times: tuple[float, ...]

    @property
    def n(self) -> int:
        return len(self.times)

    @property
    def percolates(self) -> bool:
        return all(t != NEVER for t in self.times)

    @property
    def max_time(self) -> int:
        return max((int(t) for t in self.times if t != NEVER), default=0)

    @property
    def t(self) -> float:
        """Percolation time, or NEVER if the seed is not a hull set."""
        return self.max_time if self.percolates else NEVER

    @property
    def infected(self) -> frozenset[int]:
        return frozenset(v for v, t in enumerate(self.times) if t != NEVER)

    def at(self, k: int) -> frozenset[int]:
        return frozenset(v for v, t in enumerate(self.times) if t == k)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "seed": sorted(v + 1 for v in self.seed),
            "times": [None if t == NEVER else int(t) for t in self.times],
            "percolates": self.percolates,
            "t": None if not self.percolates else self.max_time,
        }


def simulate(g: Graph, seed: Iterable[int], r: int = 2) -> InfectionTrace:
    """Run r-neighbor bootstrap percolation to its fixed point.

    Each vertex keeps a count of infected neighbors; a vertex is queued for
    the next round the moment its count reaches ``r``. O(n + m).
    """
    if r < 1:
        raise ValueError("threshold r must be positive")
    s = _check_seed(g, seed)
    times = [NEVER] * g.n
    count = [0] * g.n
    frontier = sorted(s)
    for v in frontier:
        times[v] = 0
    t = 0
    while frontier:
        nxt = []
        for v in frontier:
            for w in g.neighbors(v):
                if times[w] == NEVER:
                    count[w] += 1
                    if count[w] == r:
                        nxt.append(w)
        t += 1
        for w in nxt:
            times[w] = t
        frontier = nxt
    return InfectionTrace(s, tuple(times))


def percolate(g: Graph, seed: Iterable[int]) -> InfectionTrace:
    return simulate(g, seed, r=2)


def infection_time(trace: InfectionTrace, v: int) -> float:
    if not 0 <= v < trace.n:
        raise IndexError(f"vertex {v} out of range")
    return trace.times[v]


def is_hull_set(g: Graph, seed: Iterable[int]) -> bool:
    return percolate(g, seed).percolates


def set_percolation_time(g: Graph, seed: Iterable[int]) -> float:
    return percolate(g, seed).t


def reduce_time(g: Graph, seed: Iterable[int]) -> frozenset[int]:
    """Add every vertex infected in round 1; the percolation time drops by one."""
    trace = percolate(g, seed)
    if not trace.percolates:
        raise NotAHullSet("seed does not percolate")
    if trace.max_time == 0:
        raise AlreadyTimeZero("seed already infects every vertex at time 0")
    return trace.seed | trace.at(1)


def infects_at_exact_time(g: Graph, seed: Iterable[int], v: int, k: int) -> bool:
    return percolate(g, seed).times[v] == k


def exists_vertex_at_exact_time(g: Graph, seed: Iterable[int], k: int) -> int | None:
    for v, t in enumerate(percolate(g, seed).times):
        if t == k:
            return v
    return None


def check_trace(g: Graph, trace: InfectionTrace) -> None:
    """Assert the local consistency conditions every 2-neighbor trace satisfies."""
    times = trace.times
    for v in range(g.n):
        t = times[v]
        assert (t == 0) == (v in trace.seed), f"vertex {v}: time 0 iff seeded"
        nbr = [times[w] for w in g.neighbors(v)]
        if t == NEVER:
            assert sum(1 for x in nbr if x != NEVER) < 2, f"vertex {v} should be infected"
        elif t >= 1:
            assert sum(1 for x in nbr if x <= t - 1) >= 2, f"vertex {v} infected too early"
            assert any(x == t - 1 for x in nbr), f"vertex {v} lacks a round-{t - 1} neighbor"
            assert sum(1 for x in nbr if x <= t - 2) < 2, f"vertex {v} infected too late"
    assert trace.percolates == (NEVER not in times)


def rounds(g: Graph, seed: Iterable[int]) -> list[frozenset[int]]:
    """The cumulative infected sets S_(0), S_(1), ... up to the fixed point."""
    trace = percolate(g, seed)
    out = []
    for k in range(trace.max_time + 1):
        out.append(frozenset(v for v, t in enumerate(trace.times) if t <= k))
    return out

