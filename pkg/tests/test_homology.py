import json

import pytest
from hypothesis import given, settings

from graph_strategies import graphs, small_suite, suite
from graphbraid.graph import (GraphError, build_graph, disjoint_union, standard_graph, subdivide)
from graphbraid.homology import (CheckReport, HomologyTable, betti_numbers, chain_level_euler,
                                 homology, homology_table, kunneth_check, les_check,
                                 one_bridge_check, unitrivalent_data, unitrivalent_top_check,
                                 verify_edge_injectivity, verify_reduced_quasi_iso)
from graphbraid.linalg import HomologyGroup

Z = HomologyGroup


def test_connected_graphs_have_rank_one_h0():
    for g in suite():
        for k in range(4):
            assert homology(g, 0, k) == Z(1)


def test_small_examples():
    assert homology(standard_graph("star", 3), 1, 2) == Z(1)
    assert homology(standard_graph("complete_bipartite", 3, 3), 1, 2) == Z(4, (2,))


def test_cycle_table():
    t = homology_table(standard_graph("cycle", 3), 1, 3)
    for k in range(4):
        assert t[(0, k)] == Z(1)
        assert t[(1, k)] == (Z(1) if k >= 1 else Z(0))


def test_interval_table():
    t = homology_table(standard_graph("interval"), 3, 4)
    for (i, k), h in t.entries.items():
        assert h == (Z(1) if i == 0 else Z(0))


def test_complete_graph_at_weight_two():
    assert betti_numbers(standard_graph("complete", 4), 2, 4) == [1, 4, 0, 0, 0]


def test_full_and_reduced_tables_agree():
    g = standard_graph("theta", 3)
    assert homology_table(g, 2, 3, None).entries == homology_table(g, 2, 3).entries


def test_homology_vanishes_above_weight():
    for g in small_suite():
        for k in range(3):
            for i in range(k + 1, k + 3):
                assert homology(g, i, k) == Z(0)


def test_isolated_vertex_holds_one_point():
    g = build_graph(["a", "b", "c"], [("a", "b")])
    # B_k of an arc plus a point: configurations with the point empty or occupied
    assert [homology(g, 0, k).betti for k in range(4)] == [1, 2, 2, 2]
    assert homology(g, 0, 2, None) == Z(2)


def test_chain_level_euler_matches_betti_sum():
    for g in suite():
        for k in range(4):
            b = betti_numbers(g, k)
            assert chain_level_euler(g, k) == sum((-1) ** i * x for i, x in enumerate(b))


def test_reduced_quasi_iso_examples():
    assert verify_reduced_quasi_iso(standard_graph("star", 3), "all", 1, 4).passed
    assert verify_reduced_quasi_iso(standard_graph("complete", 4), "all", 2, 3).passed
    assert verify_reduced_quasi_iso(standard_graph("lollipop", 1), ["v0"], 2, 3).passed


def test_reduced_quasi_iso_rejects_isolated_vertices():
    g = build_graph(["a", "b", "c"], [("a", "b")])
    with pytest.raises(GraphError):
        verify_reduced_quasi_iso(g, ["c"], 1, 2)


@pytest.mark.parametrize("g,i_max", [(standard_graph("star", 3), 1), (standard_graph("theta", 3), 1),
                                     (standard_graph("complete", 4), 2)], ids=lambda x: getattr(x, "name", x))
def test_edge_injectivity_examples(g, i_max):
    rep = verify_edge_injectivity(g, i_max, 3)
    assert rep.passed, rep.failures()


def test_les_examples():
    for g, v in ((standard_graph("complete", 4), "4"), (standard_graph("star", 3), "v0"),
                 (standard_graph("cycle", 1), "v1")):
        rep = les_check(g, v, k_max=3)
        assert rep.passed, rep.failures()


def _two_triangles():
    vs = ["a", "b", "c", "m", "d", "e", "f"]
    es = [("a", "b"), ("b", "c"), ("c", "a"), ("c", "m"), ("m", "d"), ("d", "e"), ("e", "f"), ("f", "d")]
    return build_graph(vs, es, name="bowtie")


def test_one_bridge_examples():
    assert one_bridge_check(_two_triangles(), "m", 3).passed
    path, _ = subdivide(standard_graph("interval"), 2)
    mid = next(v for v in path.vertices if path.degree(path.vertex_index(v)) == 2)
    assert one_bridge_check(path, mid, 3).passed
    l1 = standard_graph("lollipop", 1)
    tail, _ = subdivide(l1, {"e0": 2})
    new = next(v for v in tail.vertices if v not in l1.vertices)
    assert one_bridge_check(tail, new, 3).passed


def test_one_bridge_rejects_non_separating_vertex():
    c3 = standard_graph("cycle", 3)
    with pytest.raises(GraphError):
        one_bridge_check(c3, c3.vertices[0])
    with pytest.raises(GraphError):
        one_bridge_check(standard_graph("star", 3), "v0")


def test_unitrivalent_star():
    s3 = standard_graph("star", 3)
    assert unitrivalent_data(s3) == (1, 0)
    assert [homology(s3, 1, k).betti for k in (2, 3)] == [1, 3]
    assert unitrivalent_top_check(s3, 0, 4).passed


def test_unitrivalent_net_graph():
    net = standard_graph("net")
    rep = unitrivalent_top_check(net, 4, 7)
    assert rep.passed, rep.failures()
    assert homology(net, 3, 6) == Z(1)
    assert homology(net, 3, 7) == Z(6)


def test_unitrivalent_rejects_other_graphs():
    with pytest.raises(GraphError):
        unitrivalent_data(standard_graph("cycle", 3))


def test_disjoint_union_kunneth():
    for a, b in ((standard_graph("interval"), standard_graph("interval")),
                 (standard_graph("star", 3), standard_graph("cycle", 1)),
                 (standard_graph("theta", 3), standard_graph("interval"))):
        u = disjoint_union(a, b)
        assert kunneth_check(a, b, u, 2, 3).passed


def test_table_and_report_round_trip():
    t = homology_table(standard_graph("lollipop", 1), 2, 3)
    back = HomologyTable.from_dict(json.loads(json.dumps(t.to_dict())))
    assert back == t
    assert [(r["k"], r["i"]) for r in t.rows()] == sorted((r["k"], r["i"]) for r in t.rows())
    rep = verify_edge_injectivity(standard_graph("star", 3), 1, 2)
    assert CheckReport.from_dict(json.loads(json.dumps(rep.to_dict()))).to_dict() == rep.to_dict()


def test_empty_or_skipped_reports_do_not_pass():
    r = CheckReport("x")
    assert not r.passed
    r.skip("k=1", "too big")
    assert not r.passed
    r.add("k=0", True)
    assert r.passed
    r.add("k=2", False, "bad")
    assert not r.passed and len(r.failures()) == 1
    assert "1/2 slices, 1 skipped" in r.summary()


def test_parallel_table_equals_serial():
    g = standard_graph("complete", 4)
    assert homology_table(g, 2, 3, n_jobs=2).entries == homology_table(g, 2, 3, n_jobs=1).entries


@settings(max_examples=25)
@given(graphs(max_vertices=4, max_edges=5), graphs(max_vertices=3, max_edges=3))
def test_random_disjoint_union_kunneth(a, b):
    assert kunneth_check(a, b, disjoint_union(a, b), 2, 2).passed


@settings(max_examples=25)
@given(graphs(max_vertices=4, max_edges=5))
def test_random_reduced_equals_full(g):
    for k in range(3):
        for i in range(k + 1):
            assert homology(g, i, k, None) == homology(g, i, k)
