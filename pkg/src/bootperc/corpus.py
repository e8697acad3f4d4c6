"""Graph corpora for exhaustive and randomized checks.

``nonisomorphic_connected`` needs pynauty (the ``corpus`` extra); everything
else is pure Python.
"""

from __future__ import annotations

import gzip
import random
from itertools import combinations
from pathlib import Path
from typing import Iterator

from bootperc.graph import Graph, is_bipartite, is_connected


def all_connected_labeled(n: int) -> Iterator[Graph]:
    """Every connected graph on vertices 0..n-1, by edge-set bitmask order."""
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        g = Graph(n, [p for i, p in enumerate(pairs) if (bits >> i) & 1])
        if is_connected(g):
            yield g


def random_connected_bipartite(n: int, rng: random.Random, p: float = 0.3) -> Graph:
    """Random spanning tree across a random bipartition, plus each remaining
    cross edge independently with probability ``p``."""
    if n < 2:
        return Graph(n)
    order = list(range(n))
    rng.shuffle(order)
    side = {order[0]: 0, order[1]: 1}
    edges = {(min(order[0], order[1]), max(order[0], order[1]))}
    for v in order[2:]:
        side[v] = rng.randrange(2)
        others = [w for w in side if side[w] != side[v]]
        if not others:
            side[v] ^= 1
            others = [w for w in side if w != v and side[w] != side[v]]
        w = rng.choice(others)
        edges.add((min(v, w), max(v, w)))
    for a, b in combinations(range(n), 2):
        if side[a] != side[b] and (a, b) not in edges and rng.random() < p:
            edges.add((a, b))
    return Graph(n, sorted(edges))


def random_connected(n: int, rng: random.Random, p: float = 0.3) -> Graph:
    """Random spanning tree plus each other edge with probability ``p``."""
    order = list(range(n))
    rng.shuffle(order)
    edges = set()
    for i in range(1, n):
        v, w = order[i], order[rng.randrange(i)]
        edges.add((min(v, w), max(v, w)))
    for a, b in combinations(range(n), 2):
        if (a, b) not in edges and rng.random() < p:
            edges.add((a, b))
    return Graph(n, sorted(edges))


def random_graph(n: int, rng: random.Random, p: float = 0.3) -> Graph:
    """G(n, p); may be disconnected."""
    return Graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


# ---------------------------------------------------------------- isomorphism classes

def _certificate(n: int, adj: list[set[int]]) -> bytes:
    import pynauty

    g = pynauty.Graph(n, adjacency_dict={v: sorted(adj[v]) for v in range(n) if adj[v]})
    return pynauty.certificate(g)


def extend_classes(layer: list[Graph], *, bipartite: bool = False) -> list[Graph]:
    """Isomorphism classes on n+1 vertices grown from the classes on n.

    Every connected graph has a vertex whose removal leaves it connected, so
    each connected class on n+1 vertices is some class on n vertices plus a
    new vertex with a nonempty neighborhood. For bipartite classes that
    neighborhood must sit inside one color class.
    """
    seen: set[bytes] = set()
    out = []
    for g in layer:
        base = [set(g.neighbors(v)) for v in range(g.n)]
        if bipartite:
            sides = is_bipartite(g)
            groups = [[v for v in range(g.n) if sides[v] == s] for s in "AB"]
            choices = [c for grp in groups for r in range(1, len(grp) + 1)
                       for c in combinations(grp, r)]
        else:
            choices = [c for r in range(1, g.n + 1) for c in combinations(range(g.n), r)]
        for nbrs in choices:
            adj = [set(s) for s in base]
            adj.append(set(nbrs))
            for w in nbrs:
                adj[w].add(g.n)
            cert = _certificate(g.n + 1, adj)
            if cert not in seen:
                seen.add(cert)
                out.append(Graph.from_adjacency([sorted(s) for s in adj]))
    return out


def nonisomorphic_connected(n: int, *, bipartite: bool = False) -> list[Graph]:
    """One representative per isomorphism class of connected (bipartite) graphs."""
    if n <= 0:
        return []
    layer = [Graph(1)]
    for _ in range(n - 1):
        layer = extend_classes(layer, bipartite=bipartite)
    return layer


def save_corpus(path: Path, graphs: list[Graph]) -> None:
    """One graph per line: ``n u1-v1 u2-v2 ...`` (0-based), gzip-compressed."""
    with gzip.open(path, "wt") as fh:
        for g in graphs:
            fh.write(" ".join([str(g.n)] + [f"{u}-{v}" for u, v in g.edges()]) + "\n")


def load_corpus(path: Path) -> list[Graph]:
    out = []
    with gzip.open(path, "rt") as fh:
        for line in fh:
            head, *rest = line.split()
            out.append(Graph(int(head), [tuple(map(int, e.split("-"))) for e in rest]))
    return out


def cached_nonisomorphic(n: int, cache_dir: Path, *, bipartite: bool = False) -> list[Graph]:
    """Like :func:`nonisomorphic_connected`, storing every layer under ``cache_dir``."""
    path = Path(cache_dir) / f"{'bip' if bipartite else 'conn'}{n}.txt.gz"
    if path.exists():
        return load_corpus(path)
    if n <= 1:
        graphs = nonisomorphic_connected(n)
    else:
        graphs = extend_classes(cached_nonisomorphic(n - 1, cache_dir, bipartite=bipartite),
                                bipartite=bipartite)
    path.parent.mkdir(parents=True, exist_ok=True)
    save_corpus(path, graphs)
    return graphs
