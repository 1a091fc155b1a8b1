"""Explicit cycles in the full Świątkowski complex and the relations among them.

Chains are dicts ``Monomial -> int`` (see :mod:`graphbraid.complex`).  Half-edges
are given as integer indices; :func:`half_edge` converts ``(vertex id, edge id)``.
"""

from __future__ import annotations

from typing import Mapping, Sequence

from .complex import (EMPTY, HALF, Chain, Monomial, _permutation_sign, boundary,
                      chain_add, chain_bidegree, multiply_edge, state_half_edge, swk_complex,
                      unit_monomial)
from .graph import Graph, GraphError
from .homology import unitrivalent_data
from .linalg import solve_in_image


def half_edge(g: Graph, vertex: str, edge: str, end: int | None = None) -> int:
    """Half-edge of ``edge`` at ``vertex``; ``end`` picks a side of a self-loop."""
    if end is not None:
        h = g.half_edge(edge, end)
        if g.vertex_of(h) != g.vertex_index(vertex):
            raise GraphError(f"end {end} of {edge!r} is not at {vertex!r}")
        return h
    return g.half_edge_at(vertex, edge)


def _single(g: Graph, edges: Mapping[int, int], states: Mapping[int, int]) -> Monomial:
    m = unit_monomial(g)
    ed, st = list(m.edges), list(m.states)
    for e, a in edges.items():
        ed[e] += a
    for v, s in states.items():
        st[v] = s
    return Monomial(tuple(ed), tuple(st))


def star_cycle(g: Graph, v, h1: int, h2: int, h3: int) -> Chain:
    """e(h1)(h2 - h3) + e(h2)(h3 - h1) + e(h3)(h1 - h2) at the vertex ``v``."""
    v = v if isinstance(v, int) else g.vertex_index(v)
    hs = (h1, h2, h3)
    if len(set(hs)) != 3:
        raise GraphError("a star cycle needs three distinct half-edges")
    for h in hs:
        if g.vertex_of(h) != v:
            raise GraphError(f"half-edge {g.half_edge_label(h)} is not at {g.vertices[v]}")
    out: Chain = {}
    for a, b, c in ((h1, h2, h3), (h2, h3, h1), (h3, h1, h2)):
        for h, sign in ((b, 1), (c, -1)):
            m = _single(g, {a >> 1: 1}, {v: HALF(h)})
            out[m] = out.get(m, 0) + sign
    return {m: x for m, x in out.items() if x}


def _walk_vertices(g: Graph, walk: Sequence[str]) -> list[tuple[int, int, int]]:
    """For a closed embedded edge walk: (vertex, outgoing half-edge, incoming half-edge)."""
    es = [g.edge_index(e) for e in walk]
    if not es:
        raise GraphError("empty walk")
    if len(set(es)) != len(es):
        raise GraphError("walk repeats an edge")
    if len(es) == 1:
        e = es[0]
        if not g.is_loop(e):
            raise GraphError("a one-edge walk must be a self-loop")
        return [(g.endpoints[e][0], 2 * e, 2 * e + 1)]
    a0, b0 = g.endpoints[es[0]]
    nxt = set(g.endpoints[es[1]])
    start = a0 if b0 in nxt else b0
    if start not in set(g.endpoints[es[-1]]) or (start == a0 and b0 not in nxt):
        raise GraphError("walk is not closed")
    cur = start
    steps = []
    for e in es:
        a, b = g.endpoints[e]
        if a == b:
            raise GraphError("a walk of length > 1 cannot use a self-loop")
        if cur == a:
            steps.append((a, 2 * e, b, 2 * e + 1))
            cur = b
        elif cur == b:
            steps.append((b, 2 * e + 1, a, 2 * e))
            cur = a
        else:
            raise GraphError(f"walk is not connected at edge {g.edges[e]!r}")
    if cur != start:
        raise GraphError("walk is not closed")
    visited = [s[0] for s in steps]
    if len(set(visited)) != len(visited):
        raise GraphError("walk is not embedded")
    out = []
    for j, (v, h_out, _, _) in enumerate(steps):
        h_in = steps[j - 1][3]
        out.append((v, h_out, h_in))
    return out


def loop_cycle(g: Graph, walk: Sequence[str]) -> Chain:
    """Σ over the walk's vertices of (outgoing half-edge - incoming half-edge).

    A self-loop is traversed from its end 0 to its end 1.
    """
    out: Chain = {}
    for v, h_out, h_in in _walk_vertices(g, walk):
        for h, sign in ((h_out, 1), (h_in, -1)):
            m = _single(g, {}, {v: HALF(h)})
            out[m] = out.get(m, 0) + sign
    return {m: x for m, x in out.items() if x}


def _support(chain: Mapping) -> tuple[set[int], set[int]]:
    verts, halves = set(), set()
    for m in chain:
        for v, s in enumerate(m.states):
            if s != EMPTY:
                verts.add(v)
                if s >= 2:
                    halves.add(state_half_edge(s))
    return verts, halves


def external_product(g: Graph, *chains: Mapping) -> Chain:
    """Product of chains living at disjoint vertices and half-edges, with Koszul signs.

    Degree-one factors are multiplied in argument order, then moved into the
    global vertex order.
    """
    result: Chain = {unit_monomial(g): 1}
    used_v: set[int] = set()
    used_h: set[int] = set()
    for ch in chains:
        verts, halves = _support(ch)
        if verts & used_v or halves & used_h:
            raise GraphError("external product of chains with overlapping supports")
        used_v |= verts
        used_h |= halves
        nxt: Chain = {}
        for m1, c1 in result.items():
            for m2, c2 in ch.items():
                edges = tuple(a + b for a, b in zip(m1.edges, m2.edges))
                states = tuple(s2 if s1 == EMPTY else s1 for s1, s2 in zip(m1.states, m2.states))
                order = [v for v, s in enumerate(m1.states) if s >= 2]
                order += [v for v, s in enumerate(m2.states) if s >= 2]
                key = Monomial(edges, states)
                nxt[key] = nxt.get(key, 0) + c1 * c2 * _permutation_sign(order)
        result = {m: x for m, x in nxt.items() if x}
    return result


# ---------------------------------------------------------------------------
# relations


def i_relation(g: Graph, h1: int, h2: int) -> Chain:
    """(e(h1) - e(h2)) times the empty configuration; h1, h2 share a vertex."""
    if g.vertex_of(h1) != g.vertex_of(h2) or h1 == h2:
        raise GraphError("I relation needs two distinct half-edges at one vertex")
    empty = {unit_monomial(g): 1}
    return chain_add(multiply_edge(empty, h1 >> 1), multiply_edge(empty, h2 >> 1), coeffs=[1, -1])


def x_relation(g: Graph, v, hs: Sequence[int]) -> Chain:
    """e1 α234 - e2 α341 + e3 α412 - e4 α123 at a vertex with four half-edges."""
    if len(hs) != 4 or len(set(hs)) != 4:
        raise GraphError("X relation needs four distinct half-edges")
    h1, h2, h3, h4 = hs
    terms = [(h1, (h2, h3, h4), 1), (h2, (h3, h4, h1), -1),
             (h3, (h4, h1, h2), 1), (h4, (h1, h2, h3), -1)]
    parts = [multiply_edge(star_cycle(g, v, *t), h >> 1) for h, t, _ in terms]
    return chain_add(*parts, coeffs=[c for _, _, c in terms])


def q_relation(g: Graph, h0: int, walk: Sequence[str]) -> Chain:
    """(e - e0)γ - α(v; h0, h_in, h_out) for a cycle through v = v(h0).

    ``walk`` starts and ends at v; e is the first edge of the walk, h_out and
    h_in are the walk's half-edges at v and e0 = e(h0) is the extra edge.
    """
    steps = _walk_vertices(g, walk)
    v, h_out, h_in = steps[0]
    if g.vertex_of(h0) != v or h0 in (h_out, h_in):
        raise GraphError("h0 must be a third half-edge at the walk's starting vertex")
    gamma = loop_cycle(g, walk)
    lhs = chain_add(multiply_edge(gamma, h_out >> 1), multiply_edge(gamma, h0 >> 1), coeffs=[1, -1])
    return chain_add(lhs, star_cycle(g, v, h0, h_in, h_out), coeffs=[1, -1])


def theta_relation(g: Graph, v1, hs1: Sequence[int], v2, hs2: Sequence[int]) -> Chain:
    """α_123(v1) - α_321(v2), where hs1[i] and hs2[i] lie on the same path."""
    a = star_cycle(g, v1, *hs1)
    b = star_cycle(g, v2, hs2[2], hs2[1], hs2[0])
    return chain_add(a, b, coeffs=[1, -1])


def o_relation(g: Graph, walk: Sequence[str], e_i: str, e_j: str) -> Chain:
    """(e_i - e_j)γ for the loop class γ of ``walk``."""
    gamma = loop_cycle(g, walk)
    return chain_add(multiply_edge(gamma, g.edge_index(e_i)), multiply_edge(gamma, g.edge_index(e_j)),
                     coeffs=[1, -1])


_RELATIONS = {"I": i_relation, "X": x_relation, "Q": q_relation, "Θ": theta_relation,
              "THETA": theta_relation, "O": o_relation}


def relation_chain(kind: str, g: Graph, *args, **kwargs) -> Chain:
    """Dispatch to the I, X, Q, Θ (or ``THETA``) and O relation builders."""
    try:
        fn = _RELATIONS[kind.upper() if kind != "Θ" else kind]
    except KeyError:
        raise ValueError(f"unknown relation kind {kind!r}") from None
    return fn(g, *args, **kwargs)


# ---------------------------------------------------------------------------
# verification


def is_closed(g: Graph, chain: Mapping) -> bool:
    return not boundary(g, chain)


def bounding_chain(g: Graph, chain: Mapping) -> Chain | None:
    """Some x with ∂x = chain in the full complex, or None if the chain is not a boundary."""
    if not chain:
        return {}
    if not is_closed(g, chain):
        raise ValueError("chain is not closed")
    i, k = chain_bidegree(chain)
    C = swk_complex(g)
    x = solve_in_image(C.differential(i + 1, k), C.vector(chain, i, k))
    return None if x is None else C.chain(x, i + 1, k)


def verify_boundary(g: Graph, chain: Mapping) -> bool:
    """True iff the closed chain is an integral boundary."""
    return bounding_chain(g, chain) is not None


def canonical_class(g: Graph) -> Chain:
    """External product over trivalent vertices of a loop class (self-loop) or a star class."""
    N, _ = unitrivalent_data(g)
    factors = []
    for v in range(g.num_vertices):
        hs = g.half_edges_at(v)
        if len(hs) != 3:
            continue
        loops = [h >> 1 for h in hs if g.is_loop(h >> 1)]
        if loops:
            factors.append(loop_cycle(g, [g.edges[loops[0]]]))
        else:
            factors.append(star_cycle(g, v, *hs))
    return external_product(g, *factors)


def relation_suite() -> "CheckReport":
    """Relations on their defining graphs and on K4; star and loop classes are nontrivial."""
    from .graph import standard_graph
    from .homology import CheckReport

    rep = CheckReport("relations")

    def boundary_case(name, g, chain):
        closed = is_closed(g, chain)
        rep.add(f"{name} on {g.name}", closed and verify_boundary(g, chain),
                f"closed={closed}, terms={len(chain)}")

    def nontrivial_case(name, g, chain):
        closed = is_closed(g, chain)
        rep.add(f"{name} on {g.name}", closed and bool(chain) and not verify_boundary(g, chain),
                f"closed={closed}, terms={len(chain)}")

    s2 = standard_graph("star", 2)
    boundary_case("I", s2, i_relation(s2, *s2.half_edges_at(0)))
    s4 = standard_graph("star", 4)
    boundary_case("X", s4, x_relation(s4, 0, s4.half_edges_at(0)))
    l1 = standard_graph("lollipop", 1)
    boundary_case("Q", l1, q_relation(l1, half_edge(l1, "v1", "e0"), ["e1"]))
    th = standard_graph("theta", 3)
    boundary_case("Θ", th, theta_relation(th, 0, th.half_edges_at(0), 1, th.half_edges_at(1)))
    c3 = standard_graph("cycle", 3)
    boundary_case("O", c3, o_relation(c3, ["e1", "e2", "e3"], "e1", "e2"))

    k4 = standard_graph("complete", 4)
    H = lambda v, e: half_edge(k4, v, e)
    boundary_case("I", k4, i_relation(k4, H("1", "12"), H("1", "13")))
    boundary_case("Θ", k4, theta_relation(k4, "1", [H("1", "12"), H("1", "13"), H("1", "14")],
                                          "2", [H("2", "12"), H("2", "23"), H("2", "24")]))
    boundary_case("Q", k4, q_relation(k4, H("1", "14"), ["12", "23", "13"]))
    boundary_case("O", k4, o_relation(k4, ["12", "23", "13"], "12", "23"))

    s3 = standard_graph("star", 3)
    nontrivial_case("star", s3, star_cycle(s3, 0, *s3.half_edges_at(0)))
    nontrivial_case("star", k4, star_cycle(k4, "4", H("4", "14"), H("4", "24"), H("4", "34")))
    nontrivial_case("loop", c3, loop_cycle(c3, ["e1", "e2", "e3"]))
    nontrivial_case("loop", l1, loop_cycle(l1, ["e1"]))
    nontrivial_case("loop", k4, loop_cycle(k4, ["12", "23", "13"]))
    for kind in ("net", "complete"):
        g = standard_graph(kind, 4 if kind == "complete" else None)
        nontrivial_case("canonical class", g, canonical_class(g))
    return rep
