"""Finite multigraphs with explicit half-edges, graph surgeries and morphisms.

Vertices and edges carry opaque string identifiers.  Internally everything is
indexed by position: vertex ``v`` is ``0 <= v < num_vertices``, edge ``e`` is
``0 <= e < num_edges`` and the half-edge at end ``s in {0, 1}`` of edge ``e``
is ``2 * e + s``.  The resulting total orders (insertion order) are fixed for
the lifetime of a graph and drive every sign convention downstream.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Malformed graph data or an invalid surgery request."""


class MorphismError(ValueError):
    """Graph morphism data that fails validation."""


@dataclass(frozen=True)
class Graph:
    vertices: tuple[str, ...]
    edges: tuple[str, ...]
    endpoints: tuple[tuple[int, int], ...]
    name: str = ""
    _half_edges_at: tuple[tuple[int, ...], ...] = field(
        init=False, repr=False, compare=False)
    _vertex_pos: dict = field(init=False, repr=False, compare=False)
    _edge_pos: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise GraphError("duplicate vertex identifier")
        if len(set(self.edges)) != len(self.edges):
            raise GraphError("duplicate edge identifier")
        if len(self.endpoints) != len(self.edges):
            raise GraphError("endpoint list does not match edge list")
        nv = len(self.vertices)
        at: list[list[int]] = [[] for _ in range(nv)]
        for e, (a, b) in enumerate(self.endpoints):
            if not (0 <= a < nv and 0 <= b < nv):
                raise GraphError(f"edge {self.edges[e]!r} has a dangling endpoint")
            at[a].append(2 * e)
            at[b].append(2 * e + 1)
        object.__setattr__(self, "_half_edges_at", tuple(tuple(sorted(h)) for h in at))
        object.__setattr__(self, "_vertex_pos", {v: i for i, v in enumerate(self.vertices)})
        object.__setattr__(self, "_edge_pos", {e: i for i, e in enumerate(self.edges)})

    # -- sizes ---------------------------------------------------------------
    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def num_half_edges(self) -> int:
        return 2 * len(self.edges)

    # -- lookups ---------------------------------------------------------------
    def vertex_index(self, vid: str) -> int:
        try:
            return self._vertex_pos[vid]
        except KeyError:
            raise GraphError(f"unknown vertex {vid!r}") from None

    def edge_index(self, eid: str) -> int:
        try:
            return self._edge_pos[eid]
        except KeyError:
            raise GraphError(f"unknown edge {eid!r}") from None

    def has_vertex(self, vid: str) -> bool:
        return vid in self._vertex_pos

    def has_edge(self, eid: str) -> bool:
        return eid in self._edge_pos

    def half_edges_at(self, v: int) -> tuple[int, ...]:
        """H(v), sorted by the global half-edge order."""
        return self._half_edges_at[v]

    def degree(self, v: int) -> int:
        return len(self._half_edges_at[v])

    @staticmethod
    def edge_of(h: int) -> int:
        return h >> 1

    @staticmethod
    def end_of(h: int) -> int:
        return h & 1

    @staticmethod
    def opposite(h: int) -> int:
        return h ^ 1

    def vertex_of(self, h: int) -> int:
        return self.endpoints[h >> 1][h & 1]

    def half_edge(self, eid: str, end: int) -> int:
        return 2 * self.edge_index(eid) + end

    def half_edge_at(self, vid: str, eid: str) -> int:
        """The half-edge of ``eid`` at ``vid`` (end 0 first for self-loops)."""
        v, e = self.vertex_index(vid), self.edge_index(eid)
        a, b = self.endpoints[e]
        if a == v:
            return 2 * e
        if b == v:
            return 2 * e + 1
        raise GraphError(f"edge {eid!r} is not incident to {vid!r}")

    def half_edge_label(self, h: int) -> str:
        return f"{self.edges[h >> 1]}.{h & 1}@{self.vertices[self.vertex_of(h)]}"

    def is_loop(self, e: int) -> bool:
        a, b = self.endpoints[e]
        return a == b

    def degrees(self) -> list[int]:
        return [len(h) for h in self._half_edges_at]

    def is_simple(self) -> bool:
        seen = set()
        for a, b in self.endpoints:
            if a == b:
                return False
            key = (min(a, b), max(a, b))
            if key in seen:
                return False
            seen.add(key)
        return True

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex-index lists, ordered by least vertex."""
        parent = list(range(self.num_vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in self.endpoints:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
        groups: dict[int, list[int]] = {}
        for v in range(self.num_vertices):
            groups.setdefault(find(v), []).append(v)
        return [groups[r] for r in sorted(groups)]

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def renamed(self, name: str) -> "Graph":
        return Graph(self.vertices, self.edges, self.endpoints, name=name)

    def edge_list(self) -> list[tuple[str, str, str]]:
        return [(self.edges[e], self.vertices[a], self.vertices[b])
                for e, (a, b) in enumerate(self.endpoints)]

    def __str__(self):
        return f"Graph({self.name or '?'}: |V|={self.num_vertices}, |E|={self.num_edges})"


def build_graph(vertex_ids: Sequence, edge_endpoints: Sequence,
                edge_ids: Sequence | None = None, name: str = "") -> Graph:
    """Build a graph from vertex identifiers and ordered endpoint pairs.

    >>> g = build_graph(["a", "b"], [("a", "b")])
    >>> g.degree(0), g.degree(1)
    (1, 1)
    """
    vids = tuple(str(v) for v in vertex_ids)
    if len(set(vids)) != len(vids):
        raise GraphError("duplicate vertex identifier")
    pos = {v: i for i, v in enumerate(vids)}
    if edge_ids is None:
        eids = tuple(f"e{i}" for i in range(len(edge_endpoints)))
    else:
        eids = tuple(str(e) for e in edge_ids)
        if len(eids) != len(edge_endpoints):
            raise GraphError("edge_ids and edge_endpoints differ in length")
    ends = []
    for eid, (a, b) in zip(eids, edge_endpoints):
        a, b = str(a), str(b)
        if a not in pos or b not in pos:
            missing = a if a not in pos else b
            raise GraphError(f"edge {eid!r} references unknown vertex {missing!r}")
        ends.append((pos[a], pos[b]))
    return Graph(vids, eids, tuple(ends), name=name)


def standard_graph(kind: str, n: int | None = None, m: int | None = None) -> Graph:
    """Named graph families with deterministic labels.

    ``interval``, ``star n``, ``cycle n``, ``theta n``, ``lollipop n``,
    ``complete n``, ``complete_bipartite m n`` and ``net``.
    """
    kind = kind.lower()

    def need(lo):
        if n is None or int(n) < lo:
            raise GraphError(f"{kind} needs n >= {lo}, got {n!r}")
        return int(n)

    if kind == "interval":
        return build_graph(["0", "1"], [("0", "1")], ["e"], name="I")
    if kind == "star":
        k = need(1)
        vs = [f"v{i}" for i in range(k + 1)]
        return build_graph(vs, [("v0", f"v{i}") for i in range(1, k + 1)],
                           [f"e{i}" for i in range(1, k + 1)], name=f"S{k}")
    if kind == "cycle":
        k = need(1)
        vs = [f"v{i}" for i in range(1, k + 1)]
        ends = [(vs[i], vs[(i + 1) % k]) for i in range(k)]
        return build_graph(vs, ends, [f"e{i}" for i in range(1, k + 1)], name=f"C{k}")
    if kind == "theta":
        k = need(2)
        return build_graph(["v1", "v2"], [("v1", "v2")] * k,
                           [f"e{i}" for i in range(1, k + 1)], name=f"Theta{k}")
    if kind == "lollipop":
        k = need(1)
        cyc = standard_graph("cycle", k)
        vs = list(cyc.vertices) + ["v0"]
        ends = [("v1", "v0")] + [(cyc.vertices[a], cyc.vertices[b]) for a, b in cyc.endpoints]
        return build_graph(vs, ends, ["e0"] + list(cyc.edges), name=f"L{k}")
    if kind == "complete":
        k = need(1)
        vs = [str(i) for i in range(1, k + 1)]
        pairs = [(a, b) for i, a in enumerate(vs) for b in vs[i + 1:]]
        return build_graph(vs, pairs, [a + b if k < 10 else f"{a}-{b}" for a, b in pairs],
                           name=f"K{k}")
    if kind == "complete_bipartite":
        if n is None or m is None or int(n) < 1 or int(m) < 1:
            raise GraphError("complete_bipartite needs m, n >= 1")
        left = [f"a{i}" for i in range(1, int(n) + 1)]
        right = [f"b{j}" for j in range(1, int(m) + 1)]
        pairs = [(a, b) for a in left for b in right]
        return build_graph(left + right, pairs, [a + b for a, b in pairs],
                           name=f"K{n},{m}")
    if kind == "net":
        net, _ = vertex_explosion(standard_graph("complete", 4), "4")
        return net.renamed("net")
    raise GraphError(f"unknown graph family {kind!r}")


def disjoint_union(g1: Graph, g2: Graph, name: str = "") -> Graph:
    """Disjoint union; identifiers are prefixed only when they collide."""
    clash = (set(g1.vertices) & set(g2.vertices)) or (set(g1.edges) & set(g2.edges))
    p1, p2 = ("L.", "R.") if clash else ("", "")
    nv = g1.num_vertices
    return Graph(
        tuple(p1 + v for v in g1.vertices) + tuple(p2 + v for v in g2.vertices),
        tuple(p1 + e for e in g1.edges) + tuple(p2 + e for e in g2.edges),
        g1.endpoints + tuple((a + nv, b + nv) for a, b in g2.endpoints),
        name=name or f"{g1.name}+{g2.name}",
    )


def betti1(g: Graph) -> int:
    """First Betti number |E| - |V| + #components."""
    return g.num_edges - g.num_vertices + len(g.components())


# ---------------------------------------------------------------------------
# morphisms


@dataclass(frozen=True)
class VertexImage:
    """Where a source vertex goes: onto a target vertex or into an open edge."""
    vertex: int | None = None
    edge: int | None = None
    half_edges: tuple[tuple[int, int], ...] = ()

    @property
    def into_edge(self) -> bool:
        return self.edge is not None

    def half_edge_map(self) -> dict[int, int]:
        return dict(self.half_edges)


@dataclass(frozen=True)
class GraphMorphism:
    source: Graph
    target: Graph
    edge_image: tuple[int, ...]
    vertex_image: tuple[VertexImage, ...]

    def __post_init__(self):
        self.validate()

    def validate(self) -> None:
        src, tgt = self.source, self.target
        if len(self.edge_image) != src.num_edges:
            raise MorphismError("edge_image must be total")
        if len(self.vertex_image) != src.num_vertices:
            raise MorphismError("vertex_image must be total")
        for e2 in self.edge_image:
            if not 0 <= e2 < tgt.num_edges:
                raise MorphismError("edge_image out of range")
        used_vertices: dict[int, int] = {}
        for v, img in enumerate(self.vertex_image):
            hv = src.half_edges_at(v)
            if (img.vertex is None) == (img.edge is None):
                raise MorphismError(f"vertex {src.vertices[v]!r}: need exactly one of vertex/edge")
            if img.edge is not None:
                if not 0 <= img.edge < tgt.num_edges:
                    raise MorphismError("vertex image edge out of range")
                if len(hv) > 2:
                    raise MorphismError(
                        f"vertex {src.vertices[v]!r} of valence {len(hv)} cannot map into an edge")
                for h in hv:
                    if self.edge_image[h >> 1] != img.edge:
                        raise MorphismError(
                            f"edges at {src.vertices[v]!r} must map into the same target edge")
                continue
            w = img.vertex
            if not 0 <= w < tgt.num_vertices:
                raise MorphismError("vertex image out of range")
            if w in used_vertices:
                raise MorphismError(
                    f"vertices {src.vertices[used_vertices[w]]!r} and {src.vertices[v]!r} "
                    "both map to the same target vertex")
            used_vertices[w] = v
            hmap = img.half_edge_map()
            if set(hmap) != set(hv):
                raise MorphismError(f"half-edge map at {src.vertices[v]!r} is not total")
            if len(set(hmap.values())) != len(hmap):
                raise MorphismError(f"half-edge map at {src.vertices[v]!r} is not injective")
            at_w = set(tgt.half_edges_at(w))
            for h, h2 in hmap.items():
                if h2 not in at_w:
                    raise MorphismError("half-edge image not incident to the image vertex")
                if h2 >> 1 != self.edge_image[h >> 1]:
                    raise MorphismError("half-edge image inconsistent with edge image")
        self._check_edge_preimages()

    def _check_edge_preimages(self) -> None:
        """Preimage of each open target edge must be a union of disjoint arcs."""
        src, tgt = self.source, self.target
        for e2 in range(tgt.num_edges):
            pre_edges = [e for e, img in enumerate(self.edge_image) if img == e2]
            if not pre_edges:
                continue
            inner = {v for v, img in enumerate(self.vertex_image) if img.edge == e2}
            # walk the arcs formed by pre_edges glued at inner vertices
            seen: set[int] = set()
            full_cover = 0
            arcs = 0
            for start in pre_edges:
                if start in seen:
                    continue
                arcs += 1
                comp_edges = set()
                stack = [start]
                while stack:
                    e = stack.pop()
                    if e in comp_edges:
                        continue
                    comp_edges.add(e)
                    for end in (0, 1):
                        v = src.endpoints[e][end]
                        if v in inner:
                            stack.extend(h >> 1 for h in src.half_edges_at(v))
                seen |= comp_edges
                verts = {src.endpoints[e][s] for e in comp_edges for s in (0, 1)}
                outer_hits = {
                    self.vertex_image[src.vertex_of(2 * e + s)].half_edge_map()[2 * e + s]
                    for e in comp_edges for s in (0, 1)
                    if src.vertex_of(2 * e + s) not in inner}
                if len(verts) == len(comp_edges):
                    # a closed source cycle can only wrap a target self-loop once
                    if not (tgt.is_loop(e2) and len(outer_hits) == 2
                            and len(verts - inner) == 1):
                        raise MorphismError(
                            f"preimage of edge {tgt.edges[e2]!r} is not a union of arcs")
                elif len(verts) != len(comp_edges) + 1:
                    raise MorphismError(
                        f"preimage of edge {tgt.edges[e2]!r} is not a union of arcs")
                if len(outer_hits) == 2:
                    full_cover += 1
            if full_cover and arcs > 1:
                raise MorphismError(
                    f"edge {tgt.edges[e2]!r} is covered by overlapping source arcs")

    def __repr__(self):
        return f"GraphMorphism({self.source.name or '?'} -> {self.target.name or '?'})"


def identity_morphism(g: Graph) -> GraphMorphism:
    return GraphMorphism(
        g, g, tuple(range(g.num_edges)),
        tuple(VertexImage(vertex=v, half_edges=tuple((h, h) for h in g.half_edges_at(v)))
              for v in range(g.num_vertices)))


def compose(f: GraphMorphism, g: GraphMorphism) -> GraphMorphism:
    """The composite ``g o f`` (apply ``f`` first)."""
    if f.target is not g.source and f.target != g.source:
        raise MorphismError("morphisms are not composable")
    edge_image = tuple(g.edge_image[e] for e in f.edge_image)
    images = []
    for img in f.vertex_image:
        if img.edge is not None:
            images.append(VertexImage(edge=g.edge_image[img.edge]))
            continue
        gimg = g.vertex_image[img.vertex]
        if gimg.edge is not None:
            images.append(VertexImage(edge=gimg.edge))
        else:
            gh = gimg.half_edge_map()
            images.append(VertexImage(vertex=gimg.vertex,
                                      half_edges=tuple((h, gh[h2]) for h, h2 in img.half_edges)))
    return GraphMorphism(f.source, g.target, edge_image, tuple(images))


def embedding(sub: Graph, g: Graph, vertex_map: dict, edge_map: dict) -> GraphMorphism:
    """Vertex-preserving morphism given by identifier maps (ends of edges kept)."""
    edge_image = []
    for eid in sub.edges:
        edge_image.append(g.edge_index(edge_map[eid]))
    images = []
    for v, vid in enumerate(sub.vertices):
        w = g.vertex_index(vertex_map[vid])
        hm = []
        for h in sub.half_edges_at(v):
            e2 = edge_image[h >> 1]
            a, b = g.endpoints[e2]
            if sub.is_loop(h >> 1) or a == b:
                h2 = 2 * e2 + (h & 1)
            else:
                h2 = 2 * e2 if a == w else 2 * e2 + 1
            hm.append((h, h2))
        images.append(VertexImage(vertex=w, half_edges=tuple(hm)))
    return GraphMorphism(sub, g, tuple(edge_image), tuple(images))


# ---------------------------------------------------------------------------
# surgeries


def subdivide(g: Graph, pieces_per_edge) -> tuple[Graph, GraphMorphism]:
    """Subdivide edges; returns the new graph and its smoothing onto ``g``.

    ``pieces_per_edge`` is an int (same for all edges) or a map from edge id
    to a positive int.  Piece ``j`` of edge ``e`` is named ``e#j`` and the new
    bivalent vertices ``e#1 .. e#(p-1)`` are appended after the old vertices.
    """
    if isinstance(pieces_per_edge, int):
        pieces = {eid: pieces_per_edge for eid in g.edges}
    else:
        pieces = {eid: int(pieces_per_edge.get(eid, 1)) for eid in g.edges}
    for eid, p in pieces.items():
        if p < 1:
            raise GraphError(f"edge {eid!r}: pieces must be >= 1")
    vids = list(g.vertices)
    eids: list[str] = []
    ends: list[tuple[int, int]] = []
    edge_image: list[int] = []
    new_vertex_edge: list[int] = []
    for e, eid in enumerate(g.edges):
        a, b = g.endpoints[e]
        p = pieces[eid]
        if p == 1:
            eids.append(eid)
            ends.append((a, b))
            edge_image.append(e)
            continue
        chain = [a]
        for j in range(1, p):
            vids.append(f"{eid}#{j}")
            new_vertex_edge.append(e)
            chain.append(len(vids) - 1)
        chain.append(b)
        for j in range(p):
            eids.append(f"{eid}#{j + 1}")
            ends.append((chain[j], chain[j + 1]))
            edge_image.append(e)
    sub = Graph(tuple(vids), tuple(eids), tuple(ends), name=f"{g.name}'")
    images = []
    for v in range(g.num_vertices):
        hm = []
        for h in sub.half_edges_at(v):
            e_new, end = h >> 1, h & 1
            hm.append((h, 2 * edge_image[e_new] + end))
        images.append(VertexImage(vertex=v, half_edges=tuple(hm)))
    for e in new_vertex_edge:
        images.append(VertexImage(edge=e))
    return sub, GraphMorphism(sub, g, tuple(edge_image), tuple(images))


def vertex_explosion(g: Graph, vid: str) -> tuple[Graph, GraphMorphism]:
    """Replace ``vid`` by one univalent vertex per half-edge at it.

    The new vertices take the place of ``vid`` in the vertex order, one per
    half-edge in half-edge order, named ``vid:edge`` (``vid:edge.end`` for the
    two ends of a self-loop).  The returned morphism sends each new vertex into
    its edge.
    """
    v = g.vertex_index(vid)
    hv = g.half_edges_at(v)
    new_ids = []
    for h in hv:
        eid = g.edges[h >> 1]
        new_ids.append(f"{vid}:{eid}.{h & 1}" if g.is_loop(h >> 1) else f"{vid}:{eid}")
    vids = list(g.vertices[:v]) + new_ids + list(g.vertices[v + 1:])
    shift = len(hv) - 1

    def relabel(u):
        return u if u < v else u + shift

    new_pos = {h: v + i for i, h in enumerate(hv)}
    ends = []
    for e, (a, b) in enumerate(g.endpoints):
        na = new_pos[2 * e] if a == v else relabel(a)
        nb = new_pos[2 * e + 1] if b == v else relabel(b)
        ends.append((na, nb))
    exploded = Graph(tuple(vids), g.edges, tuple(ends), name=f"{g.name}_{vid}")
    images = []
    for u in range(exploded.num_vertices):
        if v <= u < v + len(hv):
            images.append(VertexImage(edge=hv[u - v] >> 1))
        else:
            old = u if u < v else u - shift
            images.append(VertexImage(
                vertex=old, half_edges=tuple((h, h) for h in exploded.half_edges_at(u))))
    return exploded, GraphMorphism(exploded, g, tuple(range(g.num_edges)), tuple(images))


def contract_edge(g: Graph, eid: str) -> Graph:
    """Minor obtained by contracting ``eid``; a self-loop is deleted instead.

    Edge identifiers of the minor are those of ``g`` minus ``eid``, which
    records the identification E(minor) with a subset of E(g).  For a non-loop
    edge the merged vertex keeps the identifier and position of the endpoint at
    end 0.
    """
    e = g.edge_index(eid)
    a, b = g.endpoints[e]
    keep = [i for i in range(g.num_edges) if i != e]
    if a == b:
        return Graph(g.vertices, tuple(g.edges[i] for i in keep),
                     tuple(g.endpoints[i] for i in keep), name=f"{g.name}/{eid}")
    vids = [x for i, x in enumerate(g.vertices) if i != b]

    def relabel(u):
        u = a if u == b else u
        return u if u < b else u - 1

    ends = tuple((relabel(g.endpoints[i][0]), relabel(g.endpoints[i][1])) for i in keep)
    return Graph(tuple(vids), tuple(g.edges[i] for i in keep), ends, name=f"{g.name}/{eid}")


def delete_edge(g: Graph, eid: str) -> tuple[Graph, GraphMorphism]:
    """Subgraph without ``eid`` together with its embedding into ``g``."""
    e = g.edge_index(eid)
    keep = [i for i in range(g.num_edges) if i != e]
    sub = Graph(g.vertices, tuple(g.edges[i] for i in keep),
                tuple(g.endpoints[i] for i in keep), name=f"{g.name}-{eid}")
    return sub, embedding(sub, g, {x: x for x in g.vertices}, {x: x for x in sub.edges})


# ---------------------------------------------------------------------------
# text format


def parse_graph_text(text: str, source: str = "<string>") -> Graph:
    """Parse the line format ``graph NAME`` / ``vertex ID`` / ``edge ID V W``.

    ``#`` starts a comment.  Errors carry ``source:line:column``.
    """
    name = ""
    vids: list[str] = []
    vseen: dict[str, int] = {}
    eids: list[str] = []
    eseen: dict[str, int] = {}
    ends: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        matches = list(re.finditer(r"\S+", line))
        if not matches:
            continue
        toks = [m.group() for m in matches]

        def fail(msg, tok_index=0):
            col = matches[tok_index].start() + 1
            raise GraphError(f"{source}:{lineno}:{col}: {msg}")

        kw = toks[0]
        if kw == "graph":
            if len(toks) != 2:
                fail("expected 'graph <name>'")
            name = toks[1]
        elif kw == "vertex":
            if len(toks) != 2:
                fail("expected 'vertex <id>'")
            if toks[1] in vseen:
                fail(f"duplicate vertex {toks[1]!r} (first declared on line {vseen[toks[1]]})", 1)
            vseen[toks[1]] = lineno
            vids.append(toks[1])
        elif kw == "edge":
            if len(toks) != 4:
                fail("expected 'edge <id> <vid> <vid>'")
            if toks[1] in eseen:
                fail(f"duplicate edge {toks[1]!r} (first declared on line {eseen[toks[1]]})", 1)
            for j in (2, 3):
                if toks[j] not in vseen:
                    fail(f"edge {toks[1]!r} references unknown vertex {toks[j]!r}", j)
            eseen[toks[1]] = lineno
            eids.append(toks[1])
            ends.append((toks[2], toks[3]))
        else:
            fail(f"unknown declaration {kw!r}")
    return build_graph(vids, ends, eids, name=name)


def format_graph_text(g: Graph) -> str:
    lines = [f"graph {g.name or 'unnamed'}"]
    lines += [f"vertex {v}" for v in g.vertices]
    lines += [f"edge {e} {a} {b}" for e, a, b in g.edge_list()]
    return "\n".join(lines) + "\n"


def random_graph(rng, max_vertices: int = 5, max_edges: int = 7, name: str = "") -> Graph:
    """Small random multigraph (loops and parallel edges allowed) for property tests."""
    nv = rng.randint(1, max_vertices)
    ne = rng.randint(0, max_edges)
    vids = [f"v{i}" for i in range(nv)]
    ends = [(vids[rng.randrange(nv)], vids[rng.randrange(nv)]) for _ in range(ne)]
    return build_graph(vids, ends, name=name or f"rand{nv}x{ne}")


def iter_vertex_ids(g: Graph, vids: Iterable[str] | None) -> list[int]:
    if vids is None:
        return list(range(g.num_vertices))
    return [g.vertex_index(v) for v in vids]
