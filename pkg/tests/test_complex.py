from itertools import combinations

import pytest
from hypothesis import given

from graph_strategies import graphs, small_suite, suite
from graphbraid.complex import (DIFF, EMPTY, HALF, OCCUPIED, Monomial, boundary,
                                boundary_monomial, chain_add, chain_bidegree,
                                contraction_chain_map, enumerate_basis, induced_chain_map,
                                reduced_inclusion, slice_dimension_series, swk_complex,
                                unit_monomial)
from graphbraid.classes import external_product, star_cycle
from graphbraid.graph import (GraphError, build_graph, compose, contract_edge, delete_edge,
                              embedding, identity_morphism, standard_graph, subdivide,
                              vertex_explosion)
from graphbraid.linalg import IntMatrix


def mono(g, edges=None, states=None):
    e = [0] * g.num_edges
    for eid, a in (edges or {}).items():
        e[g.edge_index(eid)] = a
    s = [EMPTY] * g.num_vertices
    for vid, st in (states or {}).items():
        s[g.vertex_index(vid)] = st
    return Monomial(tuple(e), tuple(s))


def test_star_slice_dimensions():
    s3 = standard_graph("star", 3)
    assert enumerate_basis(s3, None, 1, 2).dimension == 36
    assert enumerate_basis(s3, "all", 1, 2).dimension == 6
    for g in suite():
        assert enumerate_basis(g, None, 0, 0).basis == (unit_monomial(g),)


def test_boundary_of_half_edge_on_interval():
    g = standard_graph("interval")
    a = g.vertices[0]
    h = g.half_edge_at(a, g.edges[0])
    d = boundary_monomial(g, mono(g, states={a: HALF(h)}))
    assert d == {mono(g, edges={g.edges[0]: 1}): 1, mono(g, states={a: OCCUPIED}): -1}


def test_boundary_of_difference_on_reduced_star():
    g = standard_graph("star", 3)
    h1, h2 = g.half_edge_at("v0", "e1"), g.half_edge_at("v0", "e2")
    d = boundary(g, {mono(g, states={"v0": DIFF(h2)}): 1})
    # h0 is the half-edge of e1, so (h2 - h1) has boundary e2 - e1
    assert h1 < h2
    assert d == {mono(g, edges={"e2": 1}): 1, mono(g, edges={"e1": 1}): -1}


def test_star_cycle_is_closed_in_reduced_and_full_form():
    g = standard_graph("star", 3)
    hs = [g.half_edge_at("v0", e) for e in ("e1", "e2", "e3")]
    a = star_cycle(g, "v0", *hs)
    assert chain_bidegree(a) == (1, 2)
    assert boundary(g, a) == {}


def test_leibniz_sign_for_second_factor():
    g = standard_graph("theta", 2)  # two vertices joined by two edges
    h_a = g.half_edges_at(0)[0]
    h_b = g.half_edges_at(1)[0]
    m = Monomial((0, 0), (HALF(h_a), HALF(h_b)))
    d = boundary_monomial(g, m)
    # acting on the second factor passes one degree-one state
    assert d[Monomial((0, 0), (HALF(h_a), OCCUPIED))] == 1
    assert d[Monomial((0, 0), (OCCUPIED, HALF(h_b)))] == -1


def test_koszul_swap_of_external_factors():
    g = standard_graph("theta", 2)
    x = {Monomial((0, 0), (HALF(g.half_edges_at(0)[0]), EMPTY)): 1}
    y = {Monomial((0, 0), (EMPTY, HALF(g.half_edges_at(1)[0]))): 1}
    assert external_product(g, x, y) == {m: -c for m, c in external_product(g, y, x).items()}


def test_edge_multiplication_examples():
    g = standard_graph("star", 3)
    c = swk_complex(g)
    M = c.edge_multiplication("e2", 0, 0)
    assert M.shape == (c.dim(0, 1), 1)
    assert c.chain(M @ [1], 0, 1) == {mono(g, edges={"e2": 1}): 1}
    for i in range(2):
        for k in range(3):
            a = c.edge_multiplication("e1", i, k + 1) @ c.edge_multiplication("e3", i, k)
            b = c.edge_multiplication("e3", i, k + 1) @ c.edge_multiplication("e1", i, k)
            assert a == b
    with pytest.raises(GraphError):
        c.edge_multiplication(7, 0, 0)


def test_identity_morphism_gives_identity_matrices():
    for g in small_suite():
        f = identity_morphism(g)
        for i in range(3):
            for k in range(i, 4):
                assert induced_chain_map(f, i, k) == IntMatrix.identity(swk_complex(g).dim(i, k))


def test_smoothing_sends_bivalent_vertex_into_edge():
    i_graph = standard_graph("interval")
    s2, f = subdivide(i_graph, 2)
    mid = next(v for v in s2.vertices if v not in i_graph.vertices)
    c = swk_complex(s2)
    target = swk_complex(i_graph)
    occupied = mono(s2, states={mid: OCCUPIED})
    M = induced_chain_map(f, 0, 1)
    assert target.chain(M @ c.vector({occupied: 1}, 0, 1), 0, 1) == {mono(i_graph, edges={"e": 1}): 1}
    h = s2.half_edges_at(s2.vertex_index(mid))[0]
    M1 = induced_chain_map(f, 1, 1)
    assert not any(M1 @ c.vector({mono(s2, states={mid: HALF(h)}): 1}, 1, 1))


def test_leg_inclusion_maps_half_edge_to_half_edge():
    s3 = standard_graph("star", 3)
    leg = build_graph(["a", "b"], [("a", "b")], edge_ids=["x"], name="leg")
    f = embedding(leg, s3, {"a": "v0", "b": "v1"}, {"x": "e1"})
    h = leg.half_edge_at("a", "x")
    M = induced_chain_map(f, 1, 1)
    v = swk_complex(leg).vector({mono(leg, states={"a": HALF(h)}): 1}, 1, 1)
    out = swk_complex(s3).chain(M @ v, 1, 1)
    assert out == {mono(s3, states={"v0": HALF(s3.half_edge_at("v0", "e1"))}): 1}


def _is_chain_map(src_d, tgt_d, f_hi, f_lo):
    return tgt_d @ f_hi == f_lo @ src_d


@pytest.mark.parametrize("g", suite(), ids=lambda g: g.name)
def test_differential_squares_to_zero_and_preserves_weight(g):
    for red in (None, "all"):
        c = swk_complex(g, red)
        for k in range(4):
            for i in range(1, min(k, c.max_degree) + 1):
                d = c.differential(i, k)
                assert d.shape == (c.dim(i - 1, k), c.dim(i, k))
                if i >= 2:
                    assert (c.differential(i - 1, k) @ d).is_zero()


@pytest.mark.parametrize("g", small_suite(), ids=lambda g: g.name)
def test_edge_multiplication_commutes_with_differential(g):
    for red in (None, "all"):
        c = swk_complex(g, red)
        for e in range(g.num_edges):
            for k in range(3):
                for i in range(1, k + 1):
                    lhs = c.differential(i, k + 1) @ c.edge_multiplication(e, i, k)
                    rhs = c.edge_multiplication(e, i - 1, k) @ c.differential(i, k)
                    assert lhs == rhs


def test_functoriality_for_iterated_subdivision():
    g = standard_graph("theta", 3)
    s1, f1 = subdivide(g, 2)
    s2, f2 = subdivide(s1, {e: 2 for e in s1.edges[:3]})
    h = compose(f2, f1)
    for i in range(3):
        for k in range(i, 4):
            assert induced_chain_map(h, i, k) == induced_chain_map(f1, i, k) @ induced_chain_map(f2, i, k)


def test_functoriality_for_explosion_then_smoothing():
    g = standard_graph("complete", 4)
    gv, f = vertex_explosion(g, "4")
    s, sm = subdivide(gv, 2)
    h = compose(sm, f)
    for i in range(3):
        for k in range(i, 3):
            assert induced_chain_map(h, i, k) == induced_chain_map(f, i, k) @ induced_chain_map(sm, i, k)


@pytest.mark.parametrize("g", suite(), ids=lambda g: g.name)
def test_induced_maps_are_chain_maps(g):
    gv, f = vertex_explosion(g, g.vertices[0])
    a, b = swk_complex(gv), swk_complex(g)
    for k in range(3):
        for i in range(1, k + 1):
            assert _is_chain_map(a.differential(i, k), b.differential(i, k),
                                 induced_chain_map(f, i, k), induced_chain_map(f, i - 1, k))


def test_slice_dimension_series_matches_enumeration():
    for g in suite() + [standard_graph("complete_bipartite", 3, 3)]:
        series = slice_dimension_series(g, 4, 6 if g.num_edges <= 6 else 4)
        for (i, k), n in series.items():
            assert swk_complex(g).dim(i, k) == n, (g.name, i, k)


@pytest.mark.parametrize("g,eid", [
    (standard_graph("complete", 4), "12"), (standard_graph("theta", 3), "e1"),
    (standard_graph("lollipop", 1), "e0"), (standard_graph("lollipop", 1), "e1"),
    (standard_graph("star", 3), "e2"),
], ids=lambda x: getattr(x, "name", x))
def test_contraction_map_is_a_chain_map(g, eid):
    if g.is_loop(g.edge_index(eid)):
        minor = swk_complex(delete_edge(g, eid)[0])
    else:
        minor = swk_complex(contract_edge(g, eid))
    tgt = swk_complex(g)
    for k in range(4):
        for i in range(k + 1):
            f_i = contraction_chain_map(g, eid, i, k)
            assert f_i.shape == (tgt.dim(i, k), minor.dim(i, k))
            if i >= 1:
                assert _is_chain_map(minor.differential(i, k), tgt.differential(i, k),
                                     f_i, contraction_chain_map(g, eid, i - 1, k))


def test_reduced_inclusion_expands_differences():
    g = standard_graph("star", 3)
    h0, h = g.half_edge_at("v0", "e1"), g.half_edge_at("v0", "e3")
    red = swk_complex(g, "all")
    col = reduced_inclusion(g, "all", 1, 1) @ red.vector({mono(g, states={"v0": DIFF(h)}): 1}, 1, 1)
    assert swk_complex(g).chain(col, 1, 1) == {mono(g, states={"v0": HALF(h)}): 1,
                                                mono(g, states={"v0": HALF(h0)}): -1}


@pytest.mark.parametrize("g", suite(), ids=lambda g: g.name)
def test_reduced_inclusion_is_a_chain_map(g):
    full, red = swk_complex(g), swk_complex(g, "all")
    for k in range(4):
        for i in range(1, k + 1):
            assert _is_chain_map(red.differential(i, k), full.differential(i, k),
                                 reduced_inclusion(g, "all", i, k), reduced_inclusion(g, "all", i - 1, k))


def test_reduced_inclusion_rejects_isolated_vertices():
    g = build_graph(["a", "b", "c"], [("a", "b")])
    with pytest.raises(GraphError, match="isolated"):
        reduced_inclusion(g, ["c"], 0, 1)


def test_chain_helpers():
    g = standard_graph("interval")
    m = unit_monomial(g)
    assert chain_add({m: 2}, {m: -2}) == {}
    assert chain_bidegree({}) is None
    with pytest.raises(ValueError):
        chain_bidegree({m: 1, mono(g, edges={"e": 1}): 1})


@given(graphs(max_vertices=4, max_edges=5))
def test_random_differentials_square_to_zero(g):
    for red in (None, "all"):
        c = swk_complex(g, red)
        for k in range(3):
            for i in range(2, k + 1):
                assert (c.differential(i - 1, k) @ c.differential(i, k)).is_zero()
            for i in range(k + 1):
                for m in c.basis(i, k):
                    assert (m.degree, m.weight) == (i, k)


@given(graphs(max_vertices=4, max_edges=5))
def test_random_edge_linearity(g):
    c = swk_complex(g, "all")
    for e in range(g.num_edges):
        for k in range(2):
            for i in range(1, k + 1):
                assert (c.differential(i, k + 1) @ c.edge_multiplication(e, i, k)
                        == c.edge_multiplication(e, i - 1, k) @ c.differential(i, k))


@given(graphs(max_vertices=4, max_edges=4))
def test_random_subdivision_functoriality(g):
    s1, f1 = subdivide(g, 2)
    s2, f2 = subdivide(s1, {e: 1 + (n % 2) for n, e in enumerate(s1.edges)})
    h = compose(f2, f1)
    for i in range(2):
        for k in range(i, 3):
            assert induced_chain_map(h, i, k) == induced_chain_map(f1, i, k) @ induced_chain_map(f2, i, k)


def test_pairs_of_edges_commute_on_random_graph():
    g = standard_graph("complete", 4)
    c = swk_complex(g, "all")
    for a, b in combinations(range(g.num_edges), 2):
        assert (c.edge_multiplication(a, 1, 3) @ c.edge_multiplication(b, 1, 2)
                == c.edge_multiplication(b, 1, 3) @ c.edge_multiplication(a, 1, 2))
