"""Grow a decider witness into a full hull set, and search for small certificates.

Each ``extend_*`` starts from the witness seed and adds one vertex at a time,
following the sufficiency arguments: the added vertex is always far enough
from the current target that the target's late infection survives. Ties are
broken by least vertex index. Step invariants are asserted; a failure raises
:class:`InternalAssertionFailed`, which signals a bug rather than bad input.
"""

from __future__ import annotations

from bootperc import _kernels as K
from bootperc.deciders import Witness, replay
from bootperc.engine import NEVER, InfectionTrace, percolate
from bootperc.graph import Graph, ball, distances, far_set, induced_components


class WitnessReplayFailed(ValueError):
    pass


class InternalAssertionFailed(AssertionError):
    pass


def _check(cond: bool, msg: str) -> None:
    if not cond:
        raise InternalAssertionFailed(msg)


def _replayed(g: Graph, w: Witness, kind: str) -> frozenset[int]:
    if w.kind != kind:
        raise WitnessReplayFailed(f"expected a {kind} witness, got {w.kind}")
    if any(not 0 <= v < g.n for v in w.base_seed) or not replay(g, w):
        raise WitnessReplayFailed(
            f"seed does not infect vertex {w.target} at time {w.k}")
    return w.base_seed


def _late(t: float) -> bool:
    """Infected at a finite time >= 2."""
    return t != NEVER and t >= 2


def _quiet(g: Graph, trace: InfectionTrace, y: int) -> bool:
    """``y`` has no neighbor infected at time >= 2."""
    return not any(_late(trace.times[w]) for w in g.neighbors(y))


def extend_bip3(g: Graph, w: Witness) -> frozenset[int]:
    """Seed uninfected second-layer vertices of ``u`` until the set percolates."""
    seed = set(_replayed(g, w, "BIP3"))
    second = [v for v, d in enumerate(distances(g, w.u)) if d == 2]
    for _ in range(len(second) + 1):
        trace = percolate(g, seed)
        if trace.percolates:
            _check(trace.max_time >= 3, f"percolation time {trace.max_time} < 3")
            return frozenset(seed)
        q = next((v for v in second if trace.times[v] == NEVER), None)
        _check(q is not None, "no uninfected vertex left at distance 2")
        seed.add(q)
    raise InternalAssertionFailed("extension did not terminate")


def extend_gen3(g: Graph, w: Witness) -> frozenset[int]:
    """Walk the target ``u_i`` through uninfected components until nothing is left.

    Quiet step: seed an uninfected y at distance 2 from the target whose
    infected neighbor (if any) fell at time <= 1. Otherwise seed y, the least
    such vertex, and move the target to a vertex of y's uninfected component
    whose outside neighbor differs from y's. Either way the far set of the
    (new) target is added.
    """
    seed = set(_replayed(g, w, "GEN3"))
    target = w.u
    for _ in range(g.n + 1):
        trace = percolate(g, seed)
        _check(trace.times[target] >= 3,
               f"target {target} infected at time {trace.times[target]}")
        if trace.percolates:
            return frozenset(seed)
        dist = distances(g, target)
        waiting = [v for v in range(g.n) if trace.times[v] == NEVER]
        ring = [v for v in waiting if dist[v] == 2]
        _check(bool(ring), f"uninfected vertices {waiting} but none at distance 2 of {target}")
        quiet = [y for y in ring if _quiet(g, trace, y)]
        if quiet:
            y = quiet[0]
        else:
            y = ring[0]
            comp = next(c for c in induced_components(g, waiting) if y in c)
            (z,) = [v for v in g.neighbors(y) if v not in comp]
            moved = [v for v in sorted(comp)
                     if any(o not in comp and o != z for o in g.neighbors(v))]
            _check(bool(moved), f"every vertex of component {sorted(comp)} only sees {z}")
            target = moved[0]
        seed.add(y)
        seed |= far_set(g, target, 3)
    raise InternalAssertionFailed("extension did not terminate")


def extend_bip4(g: Graph, w: Witness) -> frozenset[int]:
    """Three phases around the time-4 vertex ``x``, after seeding every
    vertex at distance >= 4 from x (which keeps x at time 4).

    1. Seed uninfected vertices at distance 2 from x with no neighbor
       infected at time >= 2.
    2. Likewise at distance 3.
    3. Every uninfected component now has >= 3 vertices. In the least one,
       seed y and retarget to y' at distance 2 from y; then seed, in every
       other component, the vertices on the same side of the bipartition
       as y'. This finishes the hull set.
    """
    seed = set(_replayed(g, w, "BIP4"))
    x = w.x
    dist = distances(g, x)
    seed |= far_set(g, x, 4)
    for _ in range(g.n + 1):
        trace = percolate(g, seed)
        if trace.percolates:
            _check(trace.max_time >= 4, f"percolation time {trace.max_time} < 4")
            return frozenset(seed)
        _check(trace.times[x] == 4, f"x={x} infected at time {trace.times[x]}")
        waiting = [v for v in range(g.n) if trace.times[v] == NEVER]
        step = next((y for layer in (2, 3) for y in waiting
                     if dist[y] == layer and _quiet(g, trace, y)), None)
        if step is not None:
            seed.add(step)
            continue
        comps = induced_components(g, waiting)
        small = [sorted(c) for c in comps if len(c) < 3]
        _check(not small, f"uninfected components {small} have fewer than 3 vertices")
        comp = comps[0]
        y, y2 = _distance_two_pair(g, comp)
        rest = [v for v in waiting if v not in comp and dist[v] % 2 == dist[y2] % 2]
        seed.add(y)
        seed.update(rest)
        trace = percolate(g, seed)
        _check(trace.percolates, "final flooding step did not percolate")
        _check(trace.times[y2] >= 4, f"retargeted vertex {y2} infected at {trace.times[y2]}")
        return frozenset(seed)
    raise InternalAssertionFailed("extension did not terminate")


def _distance_two_pair(g: Graph, comp: frozenset[int]) -> tuple[int, int]:
    """Least (y, y') at distance 2 inside the induced component."""
    for y in sorted(comp):
        far = [v for c in g.neighbors(y) if c in comp
               for v in g.neighbors(c) if v in comp and v != y]
        if far:
            return y, min(far)
    raise InternalAssertionFailed(f"component {sorted(comp)} has no distance-2 pair")


def extend(g: Graph, w: Witness) -> frozenset[int]:
    return {"BIP3": extend_bip3, "GEN3": extend_gen3, "BIP4": extend_bip4}[w.kind](g, w)


def find_small_certificate(g: Graph, target: int, k: int, cap: int) -> frozenset[int] | None:
    """Least F (by size, then lexicographic) inside the radius-k ball of
    ``target`` with |F| <= cap and F alone infecting ``target`` at time k.

    Only the seed within distance k of a vertex decides whether it is
    infected by round k, so restricting F to the ball loses nothing.
    """
    if not 0 <= target < g.n:
        raise IndexError(f"vertex {target} out of range")
    pool = sorted(ball(g, target, k))
    f = K.first_exact_combo(g.masks, 0, pool, cap, k, target)
    return None if f is None else frozenset(f)
