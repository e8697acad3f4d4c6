"""Polynomial tests for t(G) >= 3 (any graph, bipartite graphs) and t(G) >= 4
(bipartite graphs).

Each test scans candidate vertices ``u`` in index order. For a fixed ``u``
the base seed is a forced set plus every vertex at distance >= k from u, and
a bounded extra set F is enumerated by size, then lexicographically. The
first hit is the witness, so the answer and the witness do not depend on how
the scan over ``u`` is split across threads.

Pruning: F never needs a vertex already in the base seed, and the base seed
already holds every vertex at distance >= k from u, so F is drawn from
N_{<=k-1}(u) minus the base. ``prune=False`` enumerates F over all of V
instead (no skipping); the verdict is the same, only slower.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from bootperc import _kernels as K
from bootperc.families import (NotBipartite, degree_one_set, forced_partners,
                               gamma_family, representative_t0u)
from bootperc.graph import Graph, distances, is_bipartite, is_connected


class NotConnected(ValueError):
    pass


@dataclass(frozen=True)
class Witness:
    """Certificate that some seed infects a vertex at exactly time k.

    ``base_seed`` is the full seed whose replay proves the claim: for BIP3
    it infects ``u`` at time 3, for GEN3 likewise, for BIP4 it infects ``x``
    at time 4.
    """

    kind: str  # "BIP3", "GEN3" or "BIP4"
    u: int
    base_seed: frozenset[int]
    v: int | None = None
    s: int | None = None
    t0: frozenset[int] = frozenset()
    f: tuple[int, ...] = ()
    gamma: dict | None = None
    x: int | None = None
    k: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "k", 4 if self.kind == "BIP4" else 3)

    @property
    def target(self) -> int:
        return self.x if self.kind == "BIP4" else self.u

    def to_json(self) -> dict:
        d: dict = {"kind": self.kind, "u": self.u + 1}
        if self.v is not None:
            d["v"] = self.v + 1
        if self.s is not None:
            d["s"] = self.s + 1
        if self.kind != "BIP3":
            d["t0"] = sorted(w + 1 for w in self.t0)
            d["f"] = [w + 1 for w in self.f]
        if self.gamma is not None:
            d["gamma"] = self.gamma
        if self.x is not None:
            d["x"] = self.x + 1
        d["seed"] = sorted(w + 1 for w in self.base_seed)
        return d

    @classmethod
    def from_json(cls, d: dict) -> "Witness":
        def opt(key):
            return d[key] - 1 if key in d else None
        return cls(
            kind=d["kind"],
            u=d["u"] - 1,
            base_seed=frozenset(w - 1 for w in d["seed"]),
            v=opt("v"),
            s=opt("s"),
            t0=frozenset(w - 1 for w in d.get("t0", [])),
            f=tuple(w - 1 for w in d.get("f", [])),
            gamma=d.get("gamma"),
            x=opt("x"),
        )


def _require(g: Graph, bipartite: bool) -> None:
    if not is_connected(g):
        raise NotConnected("graph must be connected")
    if bipartite and is_bipartite(g) is None:
        raise NotBipartite("graph must be bipartite")


def _scan(g: Graph, per_vertex: Callable[[int], Witness | None], threads: int) -> Witness | None:
    if threads <= 1:
        for u in range(g.n):
            w = per_vertex(u)
            if w is not None:
                return w
        return None
    # every u is evaluated; the least u with a witness wins
    with ThreadPoolExecutor(max_workers=threads) as pool:
        for w in pool.map(per_vertex, range(g.n)):
            if w is not None:
                return w
    return None


def _far_mask(dist: list[int], k: int) -> int:
    return K.mask_of(v for v, d in enumerate(dist) if d >= k)


def decide_bip3(g: Graph, *, threads: int = 1) -> tuple[bool, Witness | None]:
    """t(G) >= 3 for a connected bipartite graph.

    Looks for u, v in N(u), s in N_2(u) such that the leaves, N_{>=3}(u) and
    {v, s} infect u at exactly time 3. Witness: least (u, v, s).
    """
    _require(g, bipartite=True)
    if g.n <= 2:
        return False, None
    leaves = K.mask_of(degree_one_set(g))
    masks = g.masks

    def at(u: int) -> Witness | None:
        dist = distances(g, u)
        base = leaves | _far_mask(dist, 3)
        second = [w for w, d in enumerate(dist) if d == 2]
        cands = [(v, s) for v in g.neighbors(u) for s in second]
        seeds = [base | (1 << v) | (1 << s) for v, s in cands]
        i = K.first_exact(masks, seeds, 3, u)
        if i < 0:
            return None
        v, s = cands[i]
        return Witness("BIP3", u, frozenset(K.members(seeds[i])), v=v, s=s)

    w = _scan(g, at, threads)
    return w is not None, w


def decide_gen3(g: Graph, *, prune: bool = True, threads: int = 1) -> tuple[bool, Witness | None]:
    """t(G) >= 3 for a connected graph.

    For each u: T0 = the least-index pocket representative, and F with
    |F| <= 4 such that T0, N_{>=3}(u) and F infect u at exactly time 3.
    """
    _require(g, bipartite=False)
    if g.n <= 2:
        return False, None
    masks = g.masks

    def at(u: int) -> Witness | None:
        dist = distances(g, u)
        t0 = representative_t0u(g, u)
        base = K.mask_of(t0) | _far_mask(dist, 3)
        pool = _pool(g.n, base, prune)
        f = K.first_exact_combo(masks, base, pool, 4, 3, u)
        if f is None:
            return None
        seed = base | K.mask_of(f)
        return Witness("GEN3", u, frozenset(K.members(seed)), t0=t0, f=f)

    w = _scan(g, at, threads)
    return w is not None, w


def decide_bip4(g: Graph, *, prune: bool = True, threads: int = 1,
                complete: bool = True) -> tuple[bool, Witness | None]:
    """t(G) >= 4 for a connected bipartite graph.

    For each u and each T0 of the k=4 family: F with |F| <= 8 such that T0,
    N_{>=4}(u) and F infect *some* vertex at exactly time 4. The witness
    records the least such vertex as ``x``.
    """
    _require(g, bipartite=True)
    if g.n <= 2:
        return False, None
    masks = g.masks

    def at(u: int) -> Witness | None:
        far = _far_mask(distances(g, u), 4)
        extra = forced_partners(g, u) if complete else frozenset()
        tried: set[frozenset[int]] = set()
        for member in gamma_family(g, u):
            t0 = member.members | extra
            if t0 in tried:
                continue
            tried.add(t0)
            base = K.mask_of(t0) | far
            pool = _pool(g.n, base, prune)
            f = K.first_exact_combo(masks, base, pool, 8, 4, -1)
            if f is None:
                continue
            seed = base | K.mask_of(f)
            x = K.members(K.exact_hits(masks, seed, 4))[0]
            return Witness("BIP4", u, frozenset(K.members(seed)), t0=t0, f=f,
                           gamma=member.describe(), x=x)
        return None

    w = _scan(g, at, threads)
    return w is not None, w


def _pool(n: int, base: int, prune: bool) -> list[int]:
    if prune:
        return [v for v in range(n) if not (base >> v) & 1]
    return list(range(n))


def decide(g: Graph, k: int, mode: str, *, prune: bool = True,
           threads: int = 1) -> tuple[bool, Witness | None]:
    """Dispatch on (k, mode) as the command line does."""
    if mode not in ("general", "bipartite"):
        raise ValueError(f"unknown mode {mode!r}")
    if k == 3 and mode == "general":
        return decide_gen3(g, prune=prune, threads=threads)
    if k == 3:
        return decide_bip3(g, threads=threads)
    if k == 4 and mode == "bipartite":
        return decide_bip4(g, prune=prune, threads=threads)
    raise ValueError(f"no polynomial test for k={k} in mode {mode!r}")


def replay(g: Graph, w: Witness) -> bool:
    """True iff the witness seed still infects its target at exactly time k."""
    return bool(K.exact_hits(g.masks, K.mask_of(w.base_seed), w.k, w.target))
