"""Forced seed ingredients that every hull set must (partly) contain.

Three constructions:

* ``degree_one_set`` - leaves; every hull set contains all of them.
* ``representative_t0u`` - one vertex from each "pocket": a component H of
  G - v that avoids ``u`` and lies inside N(v). Each pocket is co-convex,
  so every hull set meets it; we keep min(H).
* ``gamma_family`` - the O(m) candidate sets for the bipartite k=4 test,
  assembled from the degree-2 induced paths v-x-y hanging off N[u].
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from bootperc.graph import Graph, components_excluding, distances, is_bipartite


class ValidityViolation(AssertionError):
    """A constructed pocket representative does not hit some pocket exactly once."""


class NotBipartite(ValueError):
    pass


def degree_one_set(g: Graph) -> frozenset[int]:
    return frozenset(v for v in range(g.n) if g.degree(v) == 1)


def pockets(g: Graph, u: int) -> list[tuple[int, frozenset[int]]]:
    """All (v, H): H a component of G - v with u not in H and H inside N(v).

    ``v`` ranges over every vertex, including ``u`` itself.
    """
    out = []
    for v in range(g.n):
        nbrs = set(g.neighbors(v))
        for comp in components_excluding(g, v):
            if u not in comp and comp <= nbrs:
                out.append((v, comp))
    return out


def representative_t0u(g: Graph, u: int) -> frozenset[int]:
    """The least-index member of the forced-pocket family for ``u``."""
    found = pockets(g, u)
    rep = frozenset(min(comp) for _, comp in found)
    for v, comp in found:
        if len(rep & comp) != 1:
            raise ValidityViolation(
                f"pocket {sorted(comp)} of separator {v} holds {len(rep & comp)} representatives")
    return rep


@dataclass(frozen=True)
class MPQPartition:
    """Degree-2 induced paths v-x-y around ``v``: P holds the x's, Q the y's."""

    v: int
    M: frozenset[int]
    P: frozenset[int]
    Q: frozenset[int]
    partner: dict  # x in P -> its other neighbor y in Q

    def pairs(self) -> list[tuple[int, int]]:
        """(x, y) pairs ordered by x."""
        return [(x, self.partner[x]) for x in sorted(self.P)]


def mpq(g: Graph, u: int, v: int, dist: list[int] | None = None) -> MPQPartition:
    """M/P/Q sets of ``v`` relative to ``u``; all empty unless v is in N[u]."""
    dist = distances(g, u) if dist is None else dist
    if dist[v] not in (0, 1):
        return MPQPartition(v, frozenset(), frozenset(), frozenset(), {})
    P: set[int] = set()
    Q: set[int] = set()
    partner = {}
    for x in g.neighbors(v):
        if x == u or g.degree(x) != 2:
            continue
        (y,) = [w for w in g.neighbors(x) if w != v]
        if y == u or g.degree(y) != 2 or g.has_edge(v, y):
            continue
        P.add(x)
        Q.add(y)
        partner[x] = y
    return MPQPartition(v, frozenset(P | Q), frozenset(P), frozenset(Q), partner)


@dataclass(frozen=True)
class GammaMember:
    """One candidate set of the k=4 family.

    ``kind`` is ``"T'"`` (the base member), ``"Tv"`` (one per neighbor v of
    u) or ``"Tvi"`` (one per neighbor v and pair index i, 1-based).
    """

    kind: str
    v: int | None
    i: int | None
    members: frozenset[int]

    def describe(self) -> dict:
        d: dict = {"kind": self.kind}
        if self.v is not None:
            d["v"] = self.v + 1
        if self.i is not None:
            d["i"] = self.i
        return d


def gamma_family(g: Graph, u: int) -> Iterator[GammaMember]:
    """Yield T', then T^v for each v in N(u), then T^{v,i} for each v and pair i.

    The i-th pair of v is (x, y) with x the i-th smallest vertex of P_v and y
    its degree-2 partner. "For any v' in N[u] - {v}" is read as a union.
    """
    if is_bipartite(g) is None:
        raise NotBipartite("the k=4 family is defined for bipartite graphs")
    dist = distances(g, u)
    near = [u, *g.neighbors(u)]
    parts = {v: mpq(g, u, v, dist) for v in near}
    leaves = degree_one_set(g)

    def second_layer(vs) -> frozenset[int]:
        return frozenset(w for w in vs if dist[w] == 2)

    base = frozenset().union(*(second_layer(parts[v].M) for v in near))
    yield GammaMember("T'", None, None, base | leaves)

    rest: dict[int, frozenset[int]] = {}
    for v in g.neighbors(u):
        mv = parts[v].M
        rest[v] = frozenset().union(
            *(second_layer(parts[w].M - mv) for w in near if w != v))
        yield GammaMember("Tv", v, None, rest[v] | parts[v].Q | leaves)

    for v in g.neighbors(u):
        part = parts[v]
        for i, (x, y) in enumerate(part.pairs(), start=1):
            yield GammaMember("Tvi", v, i, rest[v] | (part.Q - {y}) | {x} | leaves)


def forced_partners(g: Graph, u: int) -> frozenset[int]:
    """Degree-2 neighbors of ``u`` when ``u`` itself has degree 2.

    {u, v} is then co-convex, so a hull set that does not seed ``u`` (in
    particular one infecting u late) must seed ``v``.
    """
    if g.degree(u) != 2:
        return frozenset()
    return frozenset(v for v in g.neighbors(u) if g.degree(v) == 2)


def gamma_family_size_bound(g: Graph, u: int) -> int:
    return 1 + 2 * g.degree(u) + g.m
