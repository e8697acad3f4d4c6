import itertools

import pytest

from bootperc.corpus import all_connected_labeled
from bootperc.graph import (Graph, GraphFormatError, ball, components_excluding, cycle_graph,
                            distance_layers, distances, far_set, induced_components,
                            is_bipartite, is_connected, parse_graph, path_graph, star_graph,
                            unreachable)


def ids(vs):
    """0-based vertex set -> 1-based, for comparing against hand-written examples."""
    return {v + 1 for v in vs}


# parsing

def test_parse_k2():
    g = parse_graph("p edge 2 1\ne 1 2\n")
    assert (g.n, g.m) == (2, 1)
    assert g.edges() == [(0, 1)]


def test_parse_c4(c4):
    g = parse_graph("p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n")
    assert g == c4


def test_parse_comments_and_whitespace():
    g = parse_graph("# a comment\n\n  p   edge 3 2\n# mid\ne 2 1\n e 3 2 \n")
    assert g == path_graph(3)


@pytest.mark.parametrize("text, lineno, fragment", [
    ("p edge 2 1\ne 1 1\n", 2, "self-loop"),
    ("p edge 2 1\ne 1 3\n", 2, "out of range"),
    ("p edge 3 2\ne 1 2\ne 2 1\n", 3, "duplicate"),
    ("p edge x 1\n", 1, "malformed header"),
    ("p graph 2 1\n", 1, "malformed header"),
    ("e 1 2\n", 1, "before header"),
    ("p edge 2 1\np edge 2 1\n", 2, "second header"),
    ("p edge 2 1\nq 1 2\n", 2, "unrecognized"),
    ("p edge 2 1\ne 1\n", 2, "malformed edge"),
])
def test_parse_errors_carry_line_numbers(text, lineno, fragment):
    with pytest.raises(GraphFormatError) as exc:
        parse_graph(text)
    assert exc.value.lineno == lineno
    assert fragment in str(exc.value)
    assert f"line {lineno}" in str(exc.value)


def test_self_loop_alone_is_an_error():
    with pytest.raises(GraphFormatError, match="self-loop"):
        parse_graph("e 1 1")


def test_parse_edge_count_mismatch():
    with pytest.raises(GraphFormatError, match="declares 2 edges"):
        parse_graph("p edge 3 2\ne 1 2\n")
    with pytest.raises(GraphFormatError, match="missing"):
        parse_graph("# nothing\n")


def test_text_round_trip():
    g = Graph(6, [(0, 3), (1, 4), (2, 5), (3, 4), (4, 5)])
    assert parse_graph(g.to_text("hello\nworld")) == g


# construction invariants

def test_graph_rejects_non_simple_input():
    with pytest.raises(ValueError):
        Graph(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        Graph(2, [(0, 2)])
    with pytest.raises(ValueError):
        Graph.from_adjacency([[1], []])


def test_adjacency_is_sorted_and_symmetric():
    g = Graph(5, [(4, 0), (2, 0), (1, 3), (0, 1)])
    for u in range(g.n):
        assert list(g.neighbors(u)) == sorted(g.neighbors(u))
        for v in g.neighbors(u):
            assert u in g.neighbors(v)
    assert g.m == sum(g.degree(v) for v in range(g.n)) // 2


# distances

def test_layers_c4(c4):
    assert [ids(L) for L in distance_layers(c4, 0)] == [{1}, {2, 4}, {3}]


def test_layers_p5(p5):
    assert [ids(L) for L in distance_layers(p5, 2)] == [{3}, {2, 4}, {1, 5}]


def test_layers_k2(k2):
    assert [ids(L) for L in distance_layers(k2, 0)] == [{1}, {2}]


def test_layers_omit_unreachable():
    g = Graph(4, [(0, 1), (2, 3)])
    assert [ids(L) for L in distance_layers(g, 0)] == [{1}, {2}]
    assert ids(unreachable(g, 0)) == {3, 4}


def test_far_set_examples(p5, c4):
    assert ids(far_set(p5, 2, 2)) == {1, 5}
    assert far_set(p5, 2, 0) == frozenset(range(5))
    assert far_set(c4, 0, 3) == frozenset()
    with pytest.raises(ValueError):
        far_set(c4, 0, -1)


def test_layers_partition_and_far_set_complement():
    for g in all_connected_labeled(5):
        for u in range(g.n):
            layers = distance_layers(g, u)
            assert sum(len(L) for L in layers) == g.n
            assert frozenset().union(*layers) == frozenset(range(g.n))
            for k in range(len(layers) + 1):
                assert far_set(g, u, k) | frozenset().union(*layers[:k]) == frozenset(range(g.n))
                assert far_set(g, u, k) & ball(g, u, k - 1) == frozenset()


# bipartiteness

def test_bipartite_c4(c4):
    side = is_bipartite(c4)
    assert side is not None
    assert {v + 1 for v, s in side.items() if s == "A"} == {1, 3}
    assert {v + 1 for v, s in side.items() if s == "B"} == {2, 4}


def test_bipartite_c5_and_k2(k2):
    assert is_bipartite(cycle_graph(5)) is None
    assert is_bipartite(k2) == {0: "A", 1: "B"}


def _has_odd_cycle(g):
    # brute force: an odd closed walk exists iff some vertex reaches itself in an odd number of steps
    for v in range(g.n):
        reach = {v}
        for step in range(1, 2 * g.n + 1):
            reach = {w for x in reach for w in g.neighbors(x)}
            if step % 2 and v in reach:
                return True
    return False


def test_bipartite_matches_odd_cycle_brute_force():
    for n in range(1, 7):
        pairs = list(itertools.combinations(range(n), 2))
        for bits in range(0, 1 << len(pairs), 7 if n == 6 else 1):
            g = Graph(n, [p for i, p in enumerate(pairs) if bits >> i & 1])
            side = is_bipartite(g)
            assert (side is None) == _has_odd_cycle(g)
            if side is not None:
                assert all(side[a] != side[b] for a, b in g.edges())


# components

def test_components_excluding_examples(p3, c4, k2):
    assert [ids(c) for c in components_excluding(p3, 1)] == [{1}, {3}]
    assert [ids(c) for c in components_excluding(c4, 0)] == [{2, 3, 4}]
    assert [ids(c) for c in components_excluding(k2, 0)] == [{2}]


def test_components_excluding_partitions():
    for g in all_connected_labeled(5):
        for v in range(g.n):
            comps = components_excluding(g, v)
            assert sum(len(c) for c in comps) == g.n - 1
            assert frozenset().union(*comps) == frozenset(range(g.n)) - {v}
            assert [min(c) for c in comps] == sorted(min(c) for c in comps)


def test_induced_components():
    g = path_graph(6)
    assert induced_components(g, [0, 1, 3, 4, 5]) == [frozenset({0, 1}), frozenset({3, 4, 5})]
    assert induced_components(g, []) == []


def test_connectivity():
    assert is_connected(cycle_graph(4))
    assert not is_connected(Graph(4, [(0, 1), (2, 3)]))
    assert is_connected(Graph(1))
    assert is_connected(Graph(0))
    assert is_connected(star_graph(3))


def test_distances_bfs():
    g = cycle_graph(7)
    assert distances(g, 0) == [0, 1, 2, 3, 3, 2, 1]
