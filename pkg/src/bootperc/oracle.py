"""Exhaustive ground truth for small graphs.

Every seed S of the 2**n candidates is simulated, except those that miss a
leaf: a leaf has one neighbor, so it is infected only if seeded.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, Iterator

import numpy as np

from bootperc import _kernels as K
from bootperc.families import degree_one_set
from bootperc.graph import Graph

DEFAULT_LIMIT = 20


class TooLarge(ValueError):
    pass


def _check(g: Graph, limit: int) -> None:
    if g.n > limit:
        raise TooLarge(f"n={g.n} exceeds the exhaustive limit {limit}")


def brute_force(g: Graph, limit: int = DEFAULT_LIMIT, *, threads: int = 1) -> tuple[int, frozenset[int]]:
    """Maximum percolation time and the least seed (by bit order) attaining it."""
    _check(g, limit)
    required = K.mask_of(degree_one_set(g))
    total = 1 << g.n
    if threads <= 1 or total < 4096:
        t, s = K.max_time(g.masks, required)
    else:
        step = -(-total // threads)
        bounds = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda b: K.max_time(g.masks, required, *b), bounds))
        # chunks are in seed order, so the first chunk reaching the max has the least seed
        t = max(p[0] for p in parts)
        s = next(p[1] for p in parts if p[0] == t)
    return t, frozenset(K.members(s))


def brute_force_t(g: Graph, limit: int = DEFAULT_LIMIT) -> int:
    return brute_force(g, limit)[0]


def is_co_convex(g: Graph, T: Iterable[int]) -> bool:
    """Every vertex of T has at most one neighbor outside T."""
    ts = set(T)
    return all(sum(1 for w in g.neighbors(v) if w not in ts) <= 1 for v in ts)


def percolation_table(g: Graph, limit: int = DEFAULT_LIMIT) -> np.ndarray:
    """Percolation time of every seed mask (index = mask), -1 where it fails."""
    _check(g, limit)
    return K.scan_all(g.masks, K.mask_of(degree_one_set(g)))


def enumerate_percolating_sets(g: Graph, limit: int = DEFAULT_LIMIT) -> Iterator[tuple[frozenset[int], int]]:
    """All hull sets with their percolation times, in ascending bit order."""
    table = percolation_table(g, limit)
    for s in np.flatnonzero(table >= 0):
        yield frozenset(K.members(int(s))), int(table[s])


def vertices_at_time(g: Graph, k: int, within: Iterable[Iterable[int]] = (),
                     limit: int = DEFAULT_LIMIT) -> frozenset[int]:
    """Vertices that some hull set infects at exactly time k.

    With ``within``, only hull sets containing at least one of the given
    vertex sets count.
    """
    _check(g, limit)
    contains = sorted({K.mask_of(c) for c in within})
    return frozenset(K.members(K.hull_exact_union(
        g.masks, k, K.mask_of(degree_one_set(g)), contains)))


def hull_vertex_times(g: Graph, limit: int = DEFAULT_LIMIT) -> tuple[np.ndarray, np.ndarray]:
    """(hull seed masks, per-vertex infection time matrix) for every hull set."""
    table = percolation_table(g, limit)
    seeds = np.flatnonzero(table >= 0).astype(np.int64)
    return seeds, K.vertex_times(g.masks, seeds)
