"""Construction, tagging, and serialization tests for the graph families."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oddgraceful import (Graph, build_theorem1, build_theorem2,
                         build_theorem3, cartesian_product, corona_pendants,
                         cycle_graph, is_bipartite, ladder, parse_tag,
                         path_graph, pendant, subdivide, triangular_snake,
                         two_coloring)
from oddgraceful.graphs import U, V, W, generic


def test_path_graph_counts():
    assert (path_graph(1).p, path_graph(1).q) == (1, 0)
    assert (path_graph(2).p, path_graph(2).q) == (2, 1)
    assert (path_graph(5).p, path_graph(5).q) == (5, 4)


def test_path_graph_rejects_empty():
    with pytest.raises(ValueError):
        path_graph(0)


def test_path_graph_tags():
    g = path_graph(3)
    assert [str(t) for t in g.tags] == ["v1", "v2", "v3"]


def test_cartesian_product_smallest_ladder_is_4_cycle():
    g = cartesian_product(path_graph(2), path_graph(2))
    assert (g.p, g.q) == (4, 4)
    assert all(g.degree(v) == 2 for v in range(4))


@pytest.mark.parametrize("n", range(1, 9))
def test_cartesian_product_path_times_k2_counts(n):
    g = cartesian_product(path_graph(n), path_graph(2))
    assert (g.p, g.q) == (2 * n, 3 * n - 2)


def test_cartesian_product_p1_times_k2():
    g = cartesian_product(path_graph(1), path_graph(2))
    assert (g.p, g.q) == (2, 1)


def test_cartesian_product_rejects_empty():
    with pytest.raises(ValueError):
        cartesian_product(Graph([], []), path_graph(2))


def test_ladder_counts_and_tags():
    g = ladder(2)
    assert (g.p, g.q) == (4, 4)
    assert (ladder(3).p, ladder(3).q) == (6, 7)
    assert (ladder(10).p, ladder(10).q) == (20, 28)
    assert [str(t) for t in g.tags] == ["u1", "u2", "v1", "v2"]
    idx = g.tag_index()
    assert (idx["u1"], idx["u2"]) in g.edges or (idx["u2"], idx["u1"]) in g.edges


def test_ladder_matches_cartesian_product_structure():
    for n in (2, 3, 5):
        lad = ladder(n)
        prod = cartesian_product(path_graph(n), path_graph(2))
        assert (lad.p, lad.q) == (prod.p, prod.q)
        assert sorted(lad.degree(v) for v in range(lad.p)) == \
            sorted(prod.degree(v) for v in range(prod.p))


def test_ladder_rejects_small():
    with pytest.raises(ValueError):
        ladder(1)


def test_corona_counts():
    g = corona_pendants(ladder(2), 1)
    assert (g.p, g.q) == (8, 8)


def test_corona_zero_is_identity():
    g = ladder(3)
    assert corona_pendants(g, 0) == g


def test_corona_star():
    g = corona_pendants(path_graph(1), 3)
    assert (g.p, g.q) == (4, 3)
    assert g.degree(0) == 3
    assert all(g.degree(v) == 1 for v in range(1, 4))


def test_corona_pendant_tags_and_degrees():
    base = ladder(2)
    g = corona_pendants(base, 2)
    for v in range(base.p):
        assert g.degree(v) == base.degree(v) + 2
    assert str(g.tags[4]) == "p(u1,1)"
    assert str(g.tags[5]) == "p(u1,2)"
    for v in range(base.p, g.p):
        assert g.degree(v) == 1


def test_corona_over_pendants_does_not_nest_tags():
    g = corona_pendants(corona_pendants(path_graph(1), 1), 1)
    kinds = {t.kind for t in g.tags}
    assert "p" in kinds
    for t in g.tags:
        if t.kind == "p":
            assert t.parent.kind != "p"


def test_subdivide_examples():
    assert (subdivide(path_graph(2)).p, subdivide(path_graph(2)).q) == (3, 2)
    g = subdivide(ladder(2))
    assert (g.p, g.q) == (8, 8)
    c6 = subdivide(triangular_snake(1))
    assert (c6.p, c6.q) == (6, 6)
    assert all(c6.degree(v) == 2 for v in range(6))
    assert is_bipartite(c6)


def test_triangular_snake_counts():
    for k, (p, q) in {1: (3, 3), 2: (5, 6), 4: (9, 12)}.items():
        g = triangular_snake(k)
        assert (g.p, g.q) == (p, q)


def test_triangular_snake_rejects_zero():
    with pytest.raises(ValueError):
        triangular_snake(0)


@pytest.mark.parametrize("n", range(2, 11))
@pytest.mark.parametrize("m", range(1, 6))
def test_build_theorem1_counts(n, m):
    g = build_theorem1(n, m)
    assert g.p == 2 * n * (m + 1)
    assert g.q == 2 * m * n + 3 * n - 2


@pytest.mark.parametrize("n", range(2, 11))
@pytest.mark.parametrize("m", range(1, 6))
def test_build_theorem2_counts(n, m):
    g = build_theorem2(n, m)
    assert g.p == (5 * n - 2) * (m + 1)
    assert g.q == m * (5 * n - 2) + 2 * (3 * n - 2)


@pytest.mark.parametrize("k", range(1, 11))
@pytest.mark.parametrize("m", range(1, 6))
def test_build_theorem3_counts(k, m):
    g = build_theorem3(k, m)
    assert g.p == (5 * k + 1) * (m + 1)
    assert g.q == (5 * m + 6) * k + m


def test_builders_reject_domain_violations():
    for bad in (lambda: build_theorem1(1, 1), lambda: build_theorem1(2, 0),
                lambda: build_theorem2(1, 1), lambda: build_theorem2(2, 0),
                lambda: build_theorem3(0, 1), lambda: build_theorem3(1, 0)):
        with pytest.raises(ValueError):
            bad()


def test_builders_are_bipartite():
    for g in (ladder(5), build_theorem1(3, 2), build_theorem2(3, 1),
              build_theorem3(2, 1)):
        assert is_bipartite(g)
    assert not is_bipartite(triangular_snake(2))
    assert not is_bipartite(cycle_graph(5))


def test_pendant_degree_property():
    for g, skeleton_p, m in ((build_theorem1(3, 2), 6, 2),
                             (build_theorem2(2, 3), 8, 3),
                             (build_theorem3(2, 1), 11, 1)):
        for v in range(skeleton_p):
            assert g.tags[v].kind != "p"
        for v in range(skeleton_p, g.p):
            assert g.tags[v].kind == "p"
            assert g.degree(v) == 1


def test_canonical_vertex_order_theorem3():
    g = build_theorem3(2, 1)
    heads = [str(t) for t in g.tags[:11]]
    assert heads == ["u1", "u2", "u3", "v1", "v2", "w1", "w2",
                     "y1", "y2", "z1", "z2"]
    tail = [str(t) for t in g.tags[11:]]
    assert tail == [f"p({h},1)" for h in heads]


def test_theorem2_rungs_at_odd_positions_only():
    g = build_theorem2(3, 1)
    idx = g.tag_index()
    for j in (1, 2, 3):
        w = idx[f"w{j}"]
        nbrs = {str(g.tags[v]) for v in g.adjacency()[w]}
        assert nbrs == {f"u{2 * j - 1}", f"v{2 * j - 1}", f"p(w{j},1)"}


def test_theorem2_skeleton_matches_subdivided_ladder():
    import networkx as nx
    for n in (2, 3, 4):
        full = build_theorem2(n, 1)
        sub = subdivide(ladder(n))
        assert full.p == sub.p * 2  # pendants double the count at m=1
        skeleton = nx.Graph([(a, b) for a, b in full.edges
                             if a < sub.p and b < sub.p])
        skeleton.add_nodes_from(range(sub.p))
        assert nx.is_isomorphic(skeleton, nx.Graph(list(sub.edges)))


def test_theorem2_isomorphic_to_corona_of_subdivision():
    import networkx as nx
    for n, m in ((2, 1), (3, 1), (4, 1), (2, 2), (3, 2)):
        built = build_theorem2(n, m)
        ref = corona_pendants(subdivide(ladder(n)), m)
        assert (built.p, built.q) == (ref.p, ref.q)
        assert sorted(built.degree(v) for v in range(built.p)) == \
            sorted(ref.degree(v) for v in range(ref.p))
        if n <= 4:
            assert nx.is_isomorphic(nx.Graph(list(built.edges)),
                                    nx.Graph(list(ref.edges)))


def test_theorem3_skeleton_isomorphic_to_subdivided_snake():
    import networkx as nx
    for k in (1, 2, 3):
        built = build_theorem3(k, 1)
        skeleton_p = 5 * k + 1
        skel_edges = [(a, b) for a, b in built.edges
                      if a < skeleton_p and b < skeleton_p]
        ref = subdivide(triangular_snake(k))
        assert len(skel_edges) == ref.q
        assert nx.is_isomorphic(nx.Graph(skel_edges),
                                nx.Graph(list(ref.edges)))


def test_construction_determinism():
    a = build_theorem3(3, 2)
    b = build_theorem3(3, 2)
    assert a.tags == b.tags and a.edges == b.edges and a.family == b.family


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph([V(1)], [(0, 0)])
    with pytest.raises(ValueError):
        Graph([V(1), V(2)], [(0, 2)])
    with pytest.raises(ValueError):
        Graph([V(1), V(2)], [(0, 1), (1, 0)])


def test_two_coloring_alternates():
    colors = two_coloring(path_graph(5))
    assert colors == [0, 1, 0, 1, 0]
    assert two_coloring(cycle_graph(3)) is None


def test_tag_grammar_round_trip():
    for s in ("u3", "v2", "w1", "y4", "z2", "p(u3,2)", "p(w10,7)",
              "s(u1,u2)", "(v1,v2)"):
        assert str(parse_tag(s)) == s


def test_pendant_tag_invariant():
    with pytest.raises(ValueError):
        pendant(pendant(U(1), 1), 1)
    with pytest.raises(ValueError):
        W(0)
    g = generic("mid")
    assert pendant(g, 2).parent == g


def test_graph_json_round_trip_byte_identical():
    for g in (ladder(3), build_theorem1(2, 1), build_theorem2(2, 1),
              build_theorem3(2, 2), subdivide(triangular_snake(2))):
        text = g.to_json()
        back = Graph.from_json(text)
        assert back.to_json() == text
        assert back.fingerprint() == g.fingerprint()
        assert text.endswith("\n")


def test_graph_json_edges_sorted_small_id_first():
    g = build_theorem1(2, 1)
    for a, b in g.edges:
        assert a < b
    assert list(g.edges) == sorted(g.edges)


def test_graph_json_rejects_malformed():
    with pytest.raises(ValueError):
        Graph.from_json('{"vertices": [{"id": 1, "tag": "v1"}], "edges": []}')
    with pytest.raises(ValueError):
        Graph.from_json('{"edges": []}')


@st.composite
def small_graphs(draw):
    p = draw(st.integers(min_value=1, max_value=8))
    pairs = [(a, b) for a in range(p) for b in range(a + 1, p)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=10)
                 if pairs else st.just([]))
    return Graph([V(i + 1) for i in range(p)], edges)


@given(small_graphs())
@settings(max_examples=60, deadline=None)
def test_subdivide_counts_property(g):
    s = subdivide(g)
    assert s.p == g.p + g.q
    assert s.q == 2 * g.q
    # every cycle doubles in length, so subdivisions are always bipartite
    assert is_bipartite(s)


@given(small_graphs(), st.integers(min_value=0, max_value=3))
@settings(max_examples=60, deadline=None)
def test_corona_degree_property(g, m):
    c = corona_pendants(g, m)
    assert c.p == g.p * (m + 1)
    assert c.q == g.q + g.p * m
    for v in range(g.p):
        assert c.degree(v) == g.degree(v) + m


@given(small_graphs())
@settings(max_examples=60, deadline=None)
def test_graph_json_round_trip_property(g):
    text = g.to_json()
    assert Graph.from_json(text).to_json() == text
