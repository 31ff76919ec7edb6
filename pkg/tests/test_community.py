import random

import pytest

from bipinfluence import (Community, CommunitySet, InputError, Mode, NodeId, build_bipartite,
                          community_edges, find_communities, project)
from bipinfluence.exceptions import InvariantError
from bipinfluence.graph import ProjectedGraph

from oracles import brute_maximal_cliques, random_bipartite


def A(label):
    return NodeId(str(label), Mode.A)


def projected(edges, extra_nodes=()):
    """Projection built directly from an edge list, each edge with a dummy provenance."""
    nodes = []
    for x in [*extra_nodes, *(v for e in edges for v in e)]:
        if A(x) not in nodes:
            nodes.append(A(x))
    prov = frozenset({NodeId("via", Mode.B)})
    return ProjectedGraph(Mode.A, tuple(nodes), {frozenset((A(x), A(y))): prov for x, y in edges})


def test_triangle_triangle(triangle_graph):
    cs = find_communities(project(triangle_graph, "a"))
    assert len(cs) == 1
    assert cs[0].members == {A(1), A(2), A(3)}
    assert cs[0].size == 3


def test_path_has_no_community():
    assert len(find_communities(projected([("a", "b"), ("b", "c")]), 3)) == 0
    assert len(find_communities(projected([("a", "b"), ("b", "c")]), 2)) == 2


def test_empty_projection():
    assert len(find_communities(projected([], extra_nodes=["x"]))) == 0


def test_min_size_validated():
    with pytest.raises(InputError):
        find_communities(projected([("a", "b")]), 1)


def test_overlapping_cliques_both_reported():
    # two triangles sharing the edge b-c
    p = projected([("a", "b"), ("a", "c"), ("b", "c"), ("b", "d"), ("c", "d")])
    cs = find_communities(p)
    assert cs.as_sets() == {frozenset(map(A, "abc")), frozenset(map(A, "bcd"))}


def test_deterministic_order():
    p = projected([("x", "y"), ("y", "z"), ("x", "z"),
                   ("a", "b"), ("b", "c"), ("a", "c"), ("c", "d"), ("a", "d"), ("b", "d")])
    cs = find_communities(p)
    assert [c.labels for c in cs] == [("a", "b", "c", "d"), ("x", "y", "z")]


def test_community_edges_counts(triangle_graph):
    p = project(triangle_graph, "a")
    (c,) = find_communities(p)
    assert community_edges(c, p) == {frozenset((A(1), A(2))), frozenset((A(1), A(3))),
                                     frozenset((A(2), A(3)))}


def test_k30_community_has_435_edges():
    labels = [str(i) for i in range(30)]
    g = build_bipartite([(x, "e") for x in labels])
    p = project(g, "a")
    (c,) = find_communities(p)
    assert c.size == 30
    assert len(community_edges(c, p)) == 435


def test_k2_community_has_one_edge():
    p = projected([("a", "b")])
    (c,) = find_communities(p, 2)
    assert len(community_edges(c, p)) == 1


def test_community_edges_rejects_non_clique():
    p = projected([("a", "b"), ("b", "c")])
    with pytest.raises(InvariantError):
        community_edges(Community(frozenset(map(A, "abc"))), p)


def test_southern_women_cliques_match_brute_force(southern_women):
    p = project(southern_women, "a")
    for min_size in (2, 3):
        cs = find_communities(p, min_size)
        assert cs.as_sets() == brute_maximal_cliques(p.nodes, set(p.edges), min_size)


def test_random_projections_match_brute_force():
    rng = random.Random(11)
    for _ in range(200):
        g = random_bipartite(rng, max_total=20, max_side=14)
        for mode in (Mode.A, Mode.B):
            p = project(g, mode)
            if len(p.nodes) > 13:
                continue
            for min_size in (2, 3):
                got = find_communities(p, min_size)
                assert got.as_sets() == brute_maximal_cliques(p.nodes, set(p.edges), min_size)
                for c in got:
                    assert len(community_edges(c, p)) == c.size * (c.size - 1) // 2


def test_raising_min_size_only_drops_communities():
    rng = random.Random(3)
    for _ in range(100):
        p = project(random_bipartite(rng, max_total=16, max_side=10), "a")
        small = find_communities(p, 2)
        for m in (3, 4, 5):
            big = find_communities(p, m)
            assert big.as_sets() == {c.members for c in small if c.size >= m}


def test_community_set_dedupes_and_sorts():
    c1 = Community(frozenset(map(A, "ab")))
    c2 = Community(frozenset(map(A, "xyz")))
    cs = CommunitySet([c1, c2, c1])
    assert list(cs) == [c2, c1]
