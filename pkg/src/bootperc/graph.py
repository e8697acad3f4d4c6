"""Immutable simple graphs and the distance/component queries built on them.

Vertices are dense 0-based indices. The text format is 1-based::

    # optional comment
    p edge <n> <m>
    e <u> <v>
    ...
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence


class GraphFormatError(ValueError):
    """Malformed graph text. ``lineno`` is 1-based, 0 when not tied to a line."""

    def __init__(self, message: str, lineno: int = 0):
        self.lineno = lineno
        prefix = f"line {lineno}: " if lineno else ""
        super().__init__(prefix + message)


class Graph:
    """Undirected simple graph with sorted adjacency tuples.

    Instances are immutable; every query is a pure function of the graph.
    """

    __slots__ = ("_adj", "_m", "_masks")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if v in nbrs[u]:
                raise ValueError(f"duplicate edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
            m += 1
        self._adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in nbrs)
        self._m = m
        self._masks: tuple[int, ...] = tuple(sum(1 << w for w in s) for s in self._adj)

    @classmethod
    def from_adjacency(cls, adj: Sequence[Iterable[int]]) -> "Graph":
        edges = [(u, v) for u, row in enumerate(adj) for v in row if u < v]
        g = cls(len(adj), edges)
        if any(set(row) != set(g._adj[u]) for u, row in enumerate(adj)):
            raise ValueError("adjacency is not symmetric")
        return g

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return self._m

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self._adj

    @property
    def masks(self) -> tuple[int, ...]:
        """Neighborhood of each vertex as an int bitset."""
        return self._masks

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (self._masks[u] >> v) & 1 == 1

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self._adj[u] if u < v]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self._adj == other._adj

    def __hash__(self) -> int:
        return hash(self._adj)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def to_text(self, comment: str | None = None) -> str:
        lines = []
        if comment:
            lines.extend(f"# {c}" for c in comment.splitlines())
        lines.append(f"p edge {self.n} {self.m}")
        lines.extend(f"e {u + 1} {v + 1}" for u, v in self.edges())
        return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    """Parse the ``p edge`` text format. Errors carry the offending line number."""
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if header is not None:
                raise GraphFormatError("second header line", lineno)
            if len(parts) != 4 or parts[1] != "edge":
                raise GraphFormatError(f"malformed header {line!r}", lineno)
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise GraphFormatError(f"malformed header {line!r}", lineno) from None
            if n < 0 or m < 0:
                raise GraphFormatError("negative count in header", lineno)
            header = (n, m)
        elif parts[0] == "e":
            if len(parts) != 3:
                raise GraphFormatError(f"malformed edge line {line!r}", lineno)
            try:
                a, b = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphFormatError(f"malformed edge line {line!r}", lineno) from None
            if a == b:
                raise GraphFormatError(f"self-loop at vertex {a}", lineno)
            if header is None:
                raise GraphFormatError("edge before header", lineno)
            n = header[0]
            if not (1 <= a <= n and 1 <= b <= n):
                raise GraphFormatError(f"endpoint out of range 1..{n}", lineno)
            key = (min(a, b), max(a, b))
            if key in seen:
                raise GraphFormatError(f"duplicate edge {a} {b}", lineno)
            seen.add(key)
            edges.append((a - 1, b - 1))
        else:
            raise GraphFormatError(f"unrecognized line {line!r}", lineno)
    if header is None:
        raise GraphFormatError("missing 'p edge' header")
    if len(edges) != header[1]:
        raise GraphFormatError(f"header declares {header[1]} edges, found {len(edges)}")
    return Graph(header[0], edges)


def distances(g: Graph, u: int) -> list[int]:
    """BFS distances from ``u``; -1 marks unreachable vertices."""
    dist = [-1] * g.n
    dist[u] = 0
    queue = deque([u])
    adj = g.adjacency
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def distance_layers(g: Graph, u: int) -> list[frozenset[int]]:
    """Layer i holds the vertices at distance exactly i from ``u``.

    Unreachable vertices appear in no layer; see :func:`unreachable`.
    """
    dist = distances(g, u)
    depth = max(dist) + 1
    layers: list[set[int]] = [set() for _ in range(depth)]
    for v, d in enumerate(dist):
        if d >= 0:
            layers[d].add(v)
    return [frozenset(s) for s in layers]


def unreachable(g: Graph, u: int) -> frozenset[int]:
    return frozenset(v for v, d in enumerate(distances(g, u)) if d < 0)


def far_set(g: Graph, u: int, k: int) -> frozenset[int]:
    """Vertices at distance at least ``k`` from ``u`` (unreachable ones excluded)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return frozenset(v for v, d in enumerate(distances(g, u)) if d >= k)


def ball(g: Graph, u: int, k: int) -> frozenset[int]:
    """Vertices at distance at most ``k`` from ``u``."""
    return frozenset(v for v, d in enumerate(distances(g, u)) if 0 <= d <= k)


def is_bipartite(g: Graph) -> dict[int, str] | None:
    """Two-coloring with sides ``"A"``/``"B"``, or None if an odd cycle exists.

    BFS runs from the lowest unvisited vertex of each component, whose root
    is colored A, so the result is deterministic.
    """
    side: dict[int, str] = {}
    for root in range(g.n):
        if root in side:
            continue
        side[root] = "A"
        queue = deque([root])
        while queue:
            x = queue.popleft()
            other = "B" if side[x] == "A" else "A"
            for y in g.neighbors(x):
                if y not in side:
                    side[y] = other
                    queue.append(y)
                elif side[y] != other:
                    return None
    return side


def components_excluding(g: Graph, v: int | None = None) -> list[frozenset[int]]:
    """Connected components of ``g - v`` ordered by minimum member.

    With ``v=None`` this is just the component list of ``g``.
    """
    seen = [False] * g.n
    if v is not None:
        seen[v] = True
    comps = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        comp = [root]
        stack = [root]
        while stack:
            x = stack.pop()
            for y in g.neighbors(x):
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    stack.append(y)
        comps.append(frozenset(comp))
    return comps


def induced_components(g: Graph, vertices: Iterable[int]) -> list[frozenset[int]]:
    """Components of the subgraph induced on ``vertices``, ordered by minimum member."""
    keep = set(vertices)
    seen: set[int] = set()
    comps = []
    for root in sorted(keep):
        if root in seen:
            continue
        seen.add(root)
        comp = [root]
        stack = [root]
        while stack:
            x = stack.pop()
            for y in g.neighbors(x):
                if y in keep and y not in seen:
                    seen.add(y)
                    comp.append(y)
                    stack.append(y)
        comps.append(frozenset(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components_excluding(g)) == 1


# Small named graphs used throughout tests and demos.

def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def delay_tree(length: int) -> Graph:
    """Path w-p1-...-p_length with a pendant leaf on w and on p1..p_{length-1}.

    Vertex 0 is w, 1..length are p1..p_length, and length+1..2*length are
    the pendant leaves q0..q_{length-1} (q_i hangs on the i-th path vertex).
    Seeding the leaves infects w at time ``length``, which is also the
    maximum percolation time of the tree.
    """
    edges = [(i, i + 1) for i in range(length)]
    edges += [(i, length + 1 + i) for i in range(length)]
    return Graph(2 * length + 1, edges)
