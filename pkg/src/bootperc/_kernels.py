"""Bitmask kernels for the enumeration-heavy paths (deciders, oracle, certificates).

A seed set is an int bitset; bit v is vertex v. For n <= MAX_JIT_N the work
runs in numba-compiled loops over int64 masks, otherwise in plain Python on
arbitrary-precision ints. Both paths implement the same round rule:

    newly infected in round r = uninfected vertices with >= 2 neighbors
                                infected after round r-1

The ">= 2 infected neighbors" test keeps two running masks, ``ones`` (some
infected neighbor) and ``twos`` (two or more), updated once per vertex when
it becomes infected, so a full simulation costs O(n * rounds) word ops.
"""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

import numpy as np
from numba import njit

MAX_JIT_N = 62


def mask_of(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> list[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


# ---------------------------------------------------------------- numba path

@njit(cache=True, nogil=True)
def _jit_round_masks(adj, seed, limit, out):
    """Fill ``out[r]`` with the vertices newly infected in round r.

    Returns the number of rounds written (round 0 is the seed). Stops at a
    fixed point or after round ``limit`` when ``limit >= 0``.
    """
    n = adj.shape[0]
    infected = seed
    frontier = seed
    ones = np.int64(0)
    twos = np.int64(0)
    out[0] = seed
    r = 0
    while frontier != 0 and (limit < 0 or r < limit):
        for v in range(n):
            if (frontier >> v) & 1:
                a = adj[v]
                twos |= ones & a
                ones |= a
        frontier = twos & ~infected
        if frontier == 0:
            break
        r += 1
        out[r] = frontier
        infected |= frontier
    return r + 1


@njit(cache=True, nogil=True)
def _jit_exact(adj, seed, k, target):
    """Vertex mask infected exactly at round k (restricted to ``target`` if >= 0)."""
    n = adj.shape[0]
    infected = seed
    frontier = seed
    ones = np.int64(0)
    twos = np.int64(0)
    if k == 0:
        hit = seed
    else:
        hit = np.int64(0)
        r = 0
        while frontier != 0 and r < k:
            for v in range(n):
                if (frontier >> v) & 1:
                    a = adj[v]
                    twos |= ones & a
                    ones |= a
            frontier = twos & ~infected
            infected |= frontier
            r += 1
        if r == k:
            hit = frontier
    if target >= 0:
        return hit & (np.int64(1) << target)
    return hit


@njit(cache=True, nogil=True)
def _jit_first_exact_batch(adj, seeds, k, target):
    for i in range(seeds.shape[0]):
        if _jit_exact(adj, seeds[i], k, target) != 0:
            return i
    return -1


@njit(cache=True, nogil=True)
def _jit_first_exact_combo(adj, base, pool, cap, k, target):
    """Smallest-then-lexicographic subset F of ``pool`` with |F| <= cap such that
    base | F infects ``target`` (any vertex if target < 0) at exactly round k.

    Returns (size, idx) where idx[:size] are pool positions, or (-1, idx).
    """
    npool = pool.shape[0]
    idx = np.zeros(max(cap, 1), dtype=np.int64)
    top = min(cap, npool)
    for size in range(top + 1):
        for j in range(size):
            idx[j] = j
        while True:
            mask = base
            for j in range(size):
                mask |= np.int64(1) << pool[idx[j]]
            if _jit_exact(adj, mask, k, target) != 0:
                return size, idx
            j = size - 1
            while j >= 0 and idx[j] == npool - size + j:
                j -= 1
            if j < 0:
                break
            idx[j] += 1
            for l in range(j + 1, size):
                idx[l] = idx[l - 1] + 1
    return -1, idx


@njit(cache=True, nogil=True)
def _jit_set_time(adj, seed, full):
    """Percolation time of ``seed``, or -1 when it does not percolate."""
    n = adj.shape[0]
    infected = seed
    frontier = seed
    ones = np.int64(0)
    twos = np.int64(0)
    r = 0
    while infected != full:
        for v in range(n):
            if (frontier >> v) & 1:
                a = adj[v]
                twos |= ones & a
                ones |= a
        frontier = twos & ~infected
        if frontier == 0:
            return -1
        infected |= frontier
        r += 1
    return r


@njit(cache=True, nogil=True)
def _jit_scan_all(adj, required, lo, hi):
    """Percolation time for every seed in [lo, hi); -1 if it does not percolate
    or misses a vertex of ``required`` (such seeds cannot percolate)."""
    n = adj.shape[0]
    full = (np.int64(1) << n) - 1
    out = np.full(hi - lo, -1, dtype=np.int16)
    for s in range(lo, hi):
        if (s & required) == required:
            out[s - lo] = _jit_set_time(adj, np.int64(s), full)
    return out


@njit(cache=True, nogil=True)
def _jit_max_time(adj, required, lo, hi):
    n = adj.shape[0]
    full = (np.int64(1) << n) - 1
    best = -1
    best_seed = np.int64(-1)
    for s in range(lo, hi):
        if (s & required) == required:
            t = _jit_set_time(adj, np.int64(s), full)
            if t > best:
                best = t
                best_seed = np.int64(s)
    return best, best_seed


@njit(cache=True, nogil=True)
def _jit_vertex_times(adj, seeds, limit):
    """Per-seed, per-vertex infection times (-1 for never / beyond ``limit``)."""
    n = adj.shape[0]
    out = np.full((seeds.shape[0], n), -1, dtype=np.int16)
    rounds = np.zeros(n + 1, dtype=np.int64)
    for i in range(seeds.shape[0]):
        count = _jit_round_masks(adj, seeds[i], limit, rounds)
        for r in range(count):
            f = rounds[r]
            for v in range(n):
                if (f >> v) & 1:
                    out[i, v] = r
    return out


@njit(cache=True, nogil=True)
def _jit_hull_exact_union(adj, required, k, contains):
    """OR of the round-k frontiers over every hull set that includes
    ``required`` and (if ``contains`` is nonempty) some mask of ``contains``."""
    n = adj.shape[0]
    full = (np.int64(1) << n) - 1
    rounds = np.zeros(n + 1, dtype=np.int64)
    acc = np.int64(0)
    for s in range(np.int64(1) << n):
        if (s & required) != required:
            continue
        if contains.shape[0] > 0:
            hit = False
            for c in contains:
                if (s & c) == c:
                    hit = True
                    break
            if not hit:
                continue
        count = _jit_round_masks(adj, np.int64(s), -1, rounds)
        infected = np.int64(0)
        for r in range(count):
            infected |= rounds[r]
        if infected == full and k < count:
            acc |= rounds[k]
    return acc


# ---------------------------------------------------------------- python path

def _py_exact(adj: Sequence[int], seed: int, k: int, target: int) -> int:
    if k == 0:
        hit = seed
    else:
        infected = frontier = seed
        ones = twos = 0
        r = 0
        while frontier and r < k:
            f = frontier
            while f:
                low = f & -f
                a = adj[low.bit_length() - 1]
                twos |= ones & a
                ones |= a
                f ^= low
            frontier = twos & ~infected
            infected |= frontier
            r += 1
        hit = frontier if r == k else 0
    if target >= 0:
        return hit & (1 << target)
    return hit


def _py_set_time(adj: Sequence[int], seed: int, full: int) -> int:
    infected = frontier = seed
    ones = twos = 0
    r = 0
    while infected != full:
        f = frontier
        while f:
            low = f & -f
            a = adj[low.bit_length() - 1]
            twos |= ones & a
            ones |= a
            f ^= low
        frontier = twos & ~infected
        if not frontier:
            return -1
        infected |= frontier
        r += 1
    return r


# ------------------------------------------------------------------ dispatch

def use_jit(n: int) -> bool:
    return 0 < n <= MAX_JIT_N


def adj_array(masks: Sequence[int]) -> np.ndarray:
    return np.asarray(masks, dtype=np.int64)


def exact_hits(masks: Sequence[int], seed: int, k: int, target: int = -1) -> int:
    """Bitset of vertices (or just ``target``) infected at exactly round k."""
    if use_jit(len(masks)):
        return int(_jit_exact(adj_array(masks), np.int64(seed), k, target))
    return _py_exact(masks, seed, k, target)


def first_exact(masks: Sequence[int], seeds: Sequence[int], k: int, target: int = -1) -> int:
    """Index of the first seed infecting ``target`` (any vertex if -1) at round k."""
    if not seeds:
        return -1
    if use_jit(len(masks)):
        arr = np.asarray(seeds, dtype=np.int64)
        return int(_jit_first_exact_batch(adj_array(masks), arr, k, target))
    for i, s in enumerate(seeds):
        if _py_exact(masks, s, k, target):
            return i
    return -1


def first_exact_combo(masks: Sequence[int], base: int, pool: Sequence[int], cap: int,
                      k: int, target: int = -1) -> tuple[int, ...] | None:
    """First F (by size, then lexicographic over ``pool``) with |F| <= cap such
    that base | F hits round k exactly. Returns F as a tuple of vertices."""
    if use_jit(len(masks)):
        size, idx = _jit_first_exact_combo(adj_array(masks), np.int64(base),
                                           np.asarray(pool, dtype=np.int64), cap, k, target)
        if size < 0:
            return None
        return tuple(int(pool[i]) for i in idx[:size])
    for size in range(min(cap, len(pool)) + 1):
        for combo in combinations(pool, size):
            if _py_exact(masks, base | mask_of(combo), k, target):
                return tuple(combo)
    return None


def set_time(masks: Sequence[int], seed: int) -> int:
    full = (1 << len(masks)) - 1
    if use_jit(len(masks)):
        return int(_jit_set_time(adj_array(masks), np.int64(seed), np.int64(full)))
    return _py_set_time(masks, seed, full)


def scan_all(masks: Sequence[int], required: int = 0) -> np.ndarray:
    """Percolation time (or -1) of every seed 0 .. 2**n - 1."""
    n = len(masks)
    if use_jit(n):
        return _jit_scan_all(adj_array(masks), np.int64(required), 0, 1 << n)
    full = (1 << n) - 1
    return np.array([_py_set_time(masks, s, full) if s & required == required else -1
                     for s in range(1 << n)], dtype=np.int16)


def max_time(masks: Sequence[int], required: int = 0, lo: int = 0, hi: int | None = None) -> tuple[int, int]:
    """(best time, least seed attaining it) over seeds in [lo, hi)."""
    n = len(masks)
    hi = (1 << n) if hi is None else hi
    if use_jit(n):
        t, s = _jit_max_time(adj_array(masks), np.int64(required), lo, hi)
        return int(t), int(s)
    full = (1 << n) - 1
    best, best_seed = -1, -1
    for s in range(lo, hi):
        if s & required == required:
            t = _py_set_time(masks, s, full)
            if t > best:
                best, best_seed = t, s
    return best, best_seed


def hull_exact_union(masks: Sequence[int], k: int, required: int = 0,
                     contains: Sequence[int] = ()) -> int:
    """Vertices infected at exactly round k by some hull set that includes
    ``required`` and, when ``contains`` is given, one of its masks."""
    n = len(masks)
    if use_jit(n):
        return int(_jit_hull_exact_union(adj_array(masks), np.int64(required), k,
                                         np.asarray(list(contains), dtype=np.int64)))
    full = (1 << n) - 1
    acc = 0
    for s in range(1 << n):
        if s & required != required or (contains and not any(s & c == c for c in contains)):
            continue
        if _py_set_time(masks, s, full) >= 0:
            acc |= _py_exact(masks, s, k, -1)
    return acc


def vertex_times(masks: Sequence[int], seeds: Sequence[int] | np.ndarray, limit: int = -1) -> np.ndarray:
    """Matrix of infection times, one row per seed; -1 means never (or past ``limit``)."""
    n = len(masks)
    arr = np.asarray(seeds, dtype=np.int64)
    if use_jit(n):
        return _jit_vertex_times(adj_array(masks), arr, limit)
    out = np.full((len(arr), n), -1, dtype=np.int16)
    for i, s in enumerate(seeds):
        infected = frontier = int(s)
        ones = twos = 0
        r = 0
        for v in members(infected):
            out[i, v] = 0
        while frontier and (limit < 0 or r < limit):
            f = frontier
            while f:
                low = f & -f
                a = masks[low.bit_length() - 1]
                twos |= ones & a
                ones |= a
                f ^= low
            frontier = twos & ~infected
            infected |= frontier
            r += 1
            for v in members(frontier):
                out[i, v] = r
    return out
