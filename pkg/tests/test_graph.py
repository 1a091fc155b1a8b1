import pytest
from hypothesis import given

from graph_strategies import graphs
from graphbraid.graph import (GraphError, GraphMorphism, MorphismError, VertexImage, betti1,
                              build_graph, compose, contract_edge, delete_edge, disjoint_union,
                              format_graph_text, identity_morphism, parse_graph_text,
                              standard_graph, subdivide, vertex_explosion)


def test_interval_has_two_univalent_vertices():
    g = build_graph(["a", "b"], [("a", "b")])
    assert g.num_vertices == 2 and g.num_edges == 1
    assert g.degrees() == [1, 1]


def test_self_loop_is_bivalent_cycle():
    g = build_graph(["v"], [("v", "v")])
    assert g.degrees() == [2]
    assert g.is_loop(0)
    assert set(g.half_edges_at(0)) == {0, 1}


def test_complete_graph_is_trivalent():
    g = build_graph(["1", "2", "3", "4"],
                    [(a, b) for a in "1234" for b in "1234" if a < b])
    assert g.degrees() == [3, 3, 3, 3]


def test_build_graph_rejects_bad_input():
    with pytest.raises(GraphError):
        build_graph(["a", "a"], [])
    with pytest.raises(GraphError):
        build_graph(["a"], [("a", "b")])
    with pytest.raises(GraphError):
        build_graph(["a", "b"], [("a", "b"), ("a", "b")], edge_ids=["e", "e"])


@pytest.mark.parametrize("kind,n,nv,ne", [
    ("star", 3, 4, 3), ("theta", 3, 2, 3), ("net", None, 6, 6), ("cycle", 1, 1, 1),
    ("lollipop", 1, 2, 2), ("complete", 4, 4, 6), ("interval", None, 2, 1),
])
def test_standard_graph_sizes(kind, n, nv, ne):
    g = standard_graph(kind, n)
    assert (g.num_vertices, g.num_edges) == (nv, ne)


def test_standard_graph_shapes():
    assert max(standard_graph("star", 3).degrees()) == 3
    net = standard_graph("net")
    assert sorted(net.degrees()) == [1, 1, 1, 3, 3, 3]
    assert standard_graph("complete_bipartite", 3, 3).num_edges == 9


def test_standard_graph_rejects_invalid_parameters():
    with pytest.raises(GraphError):
        standard_graph("theta", 1)
    with pytest.raises(GraphError):
        standard_graph("star", 0)
    with pytest.raises(GraphError):
        standard_graph("dodecahedron", 3)


def test_subdivide_by_one_is_identity():
    g = standard_graph("interval")
    s, f = subdivide(g, 1)
    assert s.renamed(g.name) == g
    assert f.edge_image == (0,)


def test_subdivide_loop_into_cycle():
    s, f = subdivide(standard_graph("cycle", 1), 3)
    assert s.num_vertices == 3 and s.num_edges == 3
    assert s.degrees() == [2, 2, 2]
    assert set(f.edge_image) == {0}


def test_subdivide_interval_into_path():
    s, _ = subdivide(standard_graph("interval"), 3)
    assert (s.num_vertices, s.num_edges) == (4, 3)
    assert sorted(s.degrees()) == [1, 1, 2, 2]


def test_vertex_explosion_examples():
    legs, _ = vertex_explosion(standard_graph("star", 3), "v0")
    assert len(legs.components()) == 3 and legs.num_edges == 3
    net, _ = vertex_explosion(standard_graph("complete", 4), "4")
    assert sorted(net.degrees()) == sorted(standard_graph("net").degrees())
    arc, _ = vertex_explosion(standard_graph("cycle", 1), "v1")
    assert arc.degrees() == [1, 1]


def test_contract_edge_examples():
    assert contract_edge(standard_graph("lollipop", 1), "e0").degrees() == [2]
    c2 = contract_edge(standard_graph("cycle", 3), "e1")
    assert (c2.num_vertices, c2.num_edges) == (2, 2)
    k = contract_edge(standard_graph("complete", 4), "12")
    assert (k.num_vertices, k.num_edges) == (3, 5)
    assert not k.is_simple()


def test_betti1_examples():
    assert betti1(standard_graph("complete", 4)) == 3
    assert betti1(standard_graph("star", 5)) == 0
    assert betti1(standard_graph("complete_bipartite", 3, 3)) == 4


def test_morphism_validation_accepts_generated_morphisms():
    g = standard_graph("complete", 4)
    identity_morphism(g).validate()
    subdivide(g, 3)[1].validate()
    vertex_explosion(g, "2")[1].validate()
    delete_edge(g, "12")[1].validate()


def test_morphism_validation_rejects_overlapping_edges():
    src = standard_graph("cycle", 2)
    tgt = standard_graph("cycle", 2)
    # both edges onto the same target edge with vertex images that do not match
    with pytest.raises(MorphismError):
        GraphMorphism(src, tgt, (0, 0), identity_morphism(tgt).vertex_image)


def test_morphism_validation_rejects_non_injective_vertices():
    g = standard_graph("interval")
    t = standard_graph("cycle", 1)
    imgs = (VertexImage(vertex=0, half_edges=((0, 0),)), VertexImage(vertex=0, half_edges=((1, 1),)))
    with pytest.raises(MorphismError):
        GraphMorphism(g, t, (0,), imgs)


def test_compose_smoothings():
    g = standard_graph("theta", 3)
    s1, f1 = subdivide(g, 2)
    s2, f2 = subdivide(s1, 2)
    h = compose(f2, f1)
    assert h.source == s2 and h.target == g
    assert sorted(set(h.edge_image)) == [0, 1, 2]


def test_parse_roundtrip_and_errors():
    g = standard_graph("lollipop", 2)
    assert parse_graph_text(format_graph_text(g)) == g
    text = "graph t  # comment\nvertex a\nvertex b\n\nedge x a b\nedge y b b\n"
    h = parse_graph_text(text)
    assert h.name == "t" and h.num_edges == 2 and h.is_loop(1)
    with pytest.raises(GraphError, match=r"f:3:10"):
        parse_graph_text("vertex a\nvertex b\nedge e a c\n", "f")
    with pytest.raises(GraphError, match=r"f:2:1"):
        parse_graph_text("vertex a\nedgy e a a\n", "f")
    with pytest.raises(GraphError, match="duplicate"):
        parse_graph_text("vertex a\nvertex a\n", "f")


def test_disjoint_union_keeps_both_parts():
    u = disjoint_union(standard_graph("interval"), standard_graph("interval"))
    assert (u.num_vertices, u.num_edges) == (4, 2)
    assert len(u.components()) == 2


@given(graphs())
def test_handshake(g):
    assert sum(g.degrees()) == 2 * g.num_edges


@given(graphs())
def test_explosion_counts(g):
    for vid in g.vertices:
        v = g.vertex_index(vid)
        if g.degree(v) == 0:
            continue
        gv, f = vertex_explosion(g, vid)
        assert gv.num_edges == g.num_edges
        assert gv.num_vertices == g.num_vertices + g.degree(v) - 1
        f.validate()


@given(graphs())
def test_contraction_counts(g):
    for e, eid in enumerate(g.edges):
        m = contract_edge(g, eid)
        assert m.num_edges == g.num_edges - 1
        if g.is_loop(e):
            assert betti1(m) == betti1(g) - 1
        else:
            assert m.num_vertices == g.num_vertices - 1
            assert betti1(m) == betti1(g)


@given(graphs(max_edges=4))
def test_smoothing_sends_pieces_to_their_edge(g):
    pieces = {eid: 1 + (n % 3) for n, eid in enumerate(g.edges)}
    s, f = subdivide(g, pieces)
    f.validate()
    for eid, p in pieces.items():
        ids = [x for x in s.edges if x == eid or x.startswith(eid + "#")]
        assert len(ids) == p
        assert {f.edge_image[s.edge_index(x)] for x in ids} == {g.edge_index(eid)}
