"""The Świątkowski complex S(Γ) = Z[E] ⊗ ⊗_v S_v and its reduced variants.

A basis monomial is a pair ``(edges, states)``: a multidegree in the edge
variables and one local state per vertex.  Local states are encoded as ints:

    EMPTY = 0              the empty state, bidegree (0, 0)
    OCCUPIED = 1           the vertex itself, bidegree (0, 1)
    HALF(h) = 2 + 2h       half-edge h, bidegree (1, 1)
    DIFF(h) = 3 + 2h       h - h0 with h0 the smallest half-edge at v(h)

so sorting the tuples gives a deterministic basis order.  A monomial is read
as the ordered product e^a * s_1 * s_2 * ... * s_n over the vertex order; the
differential acts by Leibniz from the left, so acting at vertex j picks up
(-1)^(number of degree-one states before j).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import comb
from typing import Iterable, Mapping, NamedTuple

from .graph import Graph, GraphError, GraphMorphism, contract_edge, delete_edge
from .linalg import IntMatrix

EMPTY = 0
OCCUPIED = 1


def HALF(h: int) -> int:
    return 2 + 2 * h


def DIFF(h: int) -> int:
    return 3 + 2 * h


def state_degree(s: int) -> int:
    return 1 if s >= 2 else 0


def state_weight(s: int) -> int:
    return 1 if s >= 1 else 0


def state_half_edge(s: int) -> int:
    return (s - 2) >> 1


def is_difference(s: int) -> bool:
    return s >= 2 and s & 1 == 1


class Monomial(NamedTuple):
    edges: tuple[int, ...]
    states: tuple[int, ...]

    @property
    def degree(self) -> int:
        return sum(1 for s in self.states if s >= 2)

    @property
    def weight(self) -> int:
        return sum(self.edges) + sum(1 for s in self.states if s >= 1)


Chain = dict  # Monomial -> nonzero int


def unit_monomial(g: Graph) -> Monomial:
    return Monomial((0,) * g.num_edges, (EMPTY,) * g.num_vertices)


def chain_add(*chains: Mapping, coeffs: Iterable[int] | None = None) -> Chain:
    out: Chain = {}
    coeffs = list(coeffs) if coeffs is not None else [1] * len(chains)
    for c, ch in zip(coeffs, chains):
        for m, v in ch.items():
            nv = out.get(m, 0) + c * v
            if nv:
                out[m] = nv
            else:
                out.pop(m, None)
    return out


def chain_scale(chain: Mapping, c: int) -> Chain:
    return {m: c * v for m, v in chain.items()} if c else {}


def chain_bidegree(chain: Mapping) -> tuple[int, int] | None:
    """(degree, weight) of a homogeneous chain; None for the zero chain."""
    degs = {(m.degree, m.weight) for m in chain}
    if not degs:
        return None
    if len(degs) > 1:
        raise ValueError(f"chain is not homogeneous: {sorted(degs)}")
    return degs.pop()


def multiply_edge(chain: Mapping, e: int, power: int = 1) -> Chain:
    out: Chain = {}
    for m, v in chain.items():
        edges = list(m.edges)
        edges[e] += power
        out[Monomial(tuple(edges), m.states)] = v
    return out


def format_monomial(g: Graph, m: Monomial) -> str:
    parts = []
    for e, a in enumerate(m.edges):
        if a:
            parts.append(g.edges[e] if a == 1 else f"{g.edges[e]}^{a}")
    for v, s in enumerate(m.states):
        if s == OCCUPIED:
            parts.append(f"[{g.vertices[v]}]")
        elif s >= 2:
            h = state_half_edge(s)
            label = g.half_edge_label(h)
            if is_difference(s):
                label = f"({label} - {g.half_edge_label(g.half_edges_at(v)[0])})"
            parts.append(label)
    return "*".join(parts) or "1"


def format_chain(g: Graph, chain: Mapping) -> str:
    if not chain:
        return "0"
    terms = []
    for m in sorted(chain):
        c = chain[m]
        body = format_monomial(g, m)
        coef = "" if c == 1 else "-" if c == -1 else f"{c}*"
        terms.append(f"{coef}{body}")
    return " + ".join(terms).replace("+ -", "- ")


# ---------------------------------------------------------------------------
# differential at chain level


def boundary_monomial(g: Graph, m: Monomial) -> Chain:
    """∂ of a single monomial (HALF and DIFF states both allowed)."""
    out: Chain = {}
    sign = 1
    states = m.states
    for j, s in enumerate(states):
        if s < 2:
            continue
        h = state_half_edge(s)
        rest = states[:j] + (EMPTY,) + states[j + 1:]
        if is_difference(s):
            h0 = g.half_edges_at(j)[0]
            e1, e0 = h >> 1, h0 >> 1
            if e1 != e0:
                for e, c in ((e1, sign), (e0, -sign)):
                    edges = list(m.edges)
                    edges[e] += 1
                    key = Monomial(tuple(edges), rest)
                    out[key] = out.get(key, 0) + c
        else:
            edges = list(m.edges)
            edges[h >> 1] += 1
            key = Monomial(tuple(edges), rest)
            out[key] = out.get(key, 0) + sign
            key = Monomial(m.edges, states[:j] + (OCCUPIED,) + states[j + 1:])
            out[key] = out.get(key, 0) - sign
        sign = -sign
    return {k: v for k, v in out.items() if v}


def boundary(g: Graph, chain: Mapping) -> Chain:
    out: Chain = {}
    for m, c in chain.items():
        for k, v in boundary_monomial(g, m).items():
            nv = out.get(k, 0) + c * v
            if nv:
                out[k] = nv
            else:
                out.pop(k, None)
    return out


# ---------------------------------------------------------------------------
# bases and matrices


def _compositions(total: int, parts: int) -> list[tuple[int, ...]]:
    return _compositions_cached(total, parts)


@lru_cache(maxsize=None)
def _compositions_cached(total: int, parts: int) -> list[tuple[int, ...]]:
    if parts == 0:
        return [()] if total == 0 else []
    if parts == 1:
        return [(total,)]
    out = []
    for first in range(total, -1, -1):
        for rest in _compositions_cached(total - first, parts - 1):
            out.append((first,) + rest)
    out.sort()
    return out


def resolve_vertices(g: Graph, vertices) -> frozenset[int]:
    """Vertex indices from ids or indices; ``"all"`` means every non-isolated vertex."""
    if vertices is None:
        return frozenset()
    if isinstance(vertices, str):
        if vertices == "all":
            return default_reduction(g)
        vertices = [vertices]
    out = set()
    for v in vertices:
        out.add(v if isinstance(v, int) else g.vertex_index(v))
    for v in out:
        if not 0 <= v < g.num_vertices:
            raise GraphError(f"vertex index {v} out of range")
    return frozenset(out)


def default_reduction(g: Graph) -> frozenset[int]:
    return frozenset(v for v in range(g.num_vertices) if g.degree(v) > 0)


@dataclass(frozen=True)
class ComplexSlice:
    graph: Graph
    reduced: frozenset
    degree: int
    weight: int
    basis: tuple[Monomial, ...]

    def __len__(self):
        return len(self.basis)

    @property
    def dimension(self) -> int:
        return len(self.basis)


class SwiatkowskiComplex:
    """Lazily materialized slices of S̃_U(Γ) (U empty gives the full complex)."""

    def __init__(self, g: Graph, reduced=None):
        self.graph = g
        self.reduced = resolve_vertices(g, reduced)
        opts = []
        for v in range(g.num_vertices):
            hs = g.half_edges_at(v)
            if v in self.reduced:
                opts.append([(EMPTY, 0, 0)] + [(DIFF(h), 1, 1) for h in hs[1:]])
            else:
                opts.append([(EMPTY, 0, 0), (OCCUPIED, 0, 1)] + [(HALF(h), 1, 1) for h in hs])
        self._options = opts
        self._deg_capacity = [1 if any(d for _, d, _ in o) else 0 for o in opts]
        self._bases: dict[tuple[int, int], tuple[Monomial, ...]] = {}
        self._index: dict[tuple[int, int], dict[Monomial, int]] = {}
        self._diff: dict[tuple[int, int], IntMatrix] = {}

    @property
    def max_degree(self) -> int:
        return sum(self._deg_capacity)

    def _state_vectors(self, i: int, k: int):
        nv = len(self._options)
        suffix_cap = [0] * (nv + 1)
        for v in range(nv - 1, -1, -1):
            suffix_cap[v] = suffix_cap[v + 1] + self._deg_capacity[v]
        out = []
        cur: list[int] = []

        def rec(v, deg, wt):
            if deg > i or wt > k or deg + suffix_cap[v] < i:
                return
            if v == nv:
                if deg == i:
                    out.append((tuple(cur), wt))
                return
            for s, d, w in self._options[v]:
                cur.append(s)
                rec(v + 1, deg + d, wt + w)
                cur.pop()

        rec(0, 0, 0)
        return out

    def basis(self, i: int, k: int) -> tuple[Monomial, ...]:
        key = (i, k)
        if key not in self._bases:
            if i < 0 or k < 0 or i > k:
                self._bases[key] = ()
            else:
                ne = self.graph.num_edges
                mons = []
                for states, wt in self._state_vectors(i, k):
                    for edges in _compositions(k - wt, ne):
                        mons.append(Monomial(edges, states))
                mons.sort()
                self._bases[key] = tuple(mons)
        return self._bases[key]

    def index(self, i: int, k: int) -> dict[Monomial, int]:
        key = (i, k)
        if key not in self._index:
            self._index[key] = {m: n for n, m in enumerate(self.basis(i, k))}
        return self._index[key]

    def dim(self, i: int, k: int) -> int:
        return len(self.basis(i, k))

    def slice(self, i: int, k: int) -> ComplexSlice:
        return ComplexSlice(self.graph, self.reduced, i, k, self.basis(i, k))

    def differential(self, i: int, k: int) -> IntMatrix:
        """Matrix of ∂: C_{i,k} -> C_{i-1,k}."""
        key = (i, k)
        if key not in self._diff:
            cols = self.basis(i, k)
            rows = self.index(i - 1, k)
            entries = {}
            for c, m in enumerate(cols):
                for t, v in boundary_monomial(self.graph, m).items():
                    entries[(rows[t], c)] = v
            self._diff[key] = IntMatrix(len(rows), len(cols), entries)
        return self._diff[key]

    def edge_multiplication(self, e, i: int, k: int) -> IntMatrix:
        """Matrix of multiplication by an edge: C_{i,k} -> C_{i,k+1}."""
        e = e if isinstance(e, int) else self.graph.edge_index(e)
        if not 0 <= e < self.graph.num_edges:
            raise GraphError(f"edge index {e} out of range")
        src = self.basis(i, k)
        tgt = self.index(i, k + 1)
        entries = {}
        for c, m in enumerate(src):
            edges = list(m.edges)
            edges[e] += 1
            entries[(tgt[Monomial(tuple(edges), m.states)], c)] = 1
        return IntMatrix(len(tgt), len(src), entries)

    def vector(self, chain: Mapping, i: int, k: int) -> list[int]:
        idx = self.index(i, k)
        vec = [0] * len(idx)
        for m, v in chain.items():
            try:
                vec[idx[m]] += v
            except KeyError:
                raise ValueError(f"monomial {m} is not in slice ({i}, {k})") from None
        return vec

    def chain(self, vec, i: int, k: int) -> Chain:
        basis = self.basis(i, k)
        return {basis[n]: v for n, v in enumerate(vec) if v}

    def matrix_from_map(self, target: "SwiatkowskiComplex", fn, i: int, k: int) -> IntMatrix:
        """Matrix of a monomial-wise map ``fn: Monomial -> Chain`` into ``target``."""
        src = self.basis(i, k)
        tgt = target.index(i, k)
        entries: dict[tuple[int, int], int] = {}
        for c, m in enumerate(src):
            for t, v in fn(m).items():
                key = (tgt[t], c)
                entries[key] = entries.get(key, 0) + v
        return IntMatrix(len(tgt), len(src), entries)


@lru_cache(maxsize=128)
def _complex_cached(g: Graph, reduced: frozenset) -> SwiatkowskiComplex:
    return SwiatkowskiComplex(g, reduced)


def swk_complex(g: Graph, reduced=None) -> SwiatkowskiComplex:
    """Shared (cached) complex for ``g`` with reduction set ``reduced``."""
    return _complex_cached(g, resolve_vertices(g, reduced))


# ---------------------------------------------------------------------------
# module-level operations


def enumerate_basis(g: Graph, reduced, i: int, k: int) -> ComplexSlice:
    return swk_complex(g, reduced).slice(i, k)


def differential(g: Graph, reduced, i: int, k: int) -> IntMatrix:
    return swk_complex(g, reduced).differential(i, k)


def edge_multiplication(g: Graph, reduced, e, i: int, k: int) -> IntMatrix:
    return swk_complex(g, reduced).edge_multiplication(e, i, k)


def _permutation_sign(positions: list[int]) -> int:
    inv = 0
    for a in range(len(positions)):
        for b in range(a + 1, len(positions)):
            if positions[a] > positions[b]:
                inv += 1
    return -1 if inv & 1 else 1


def _expand(edges: list[int], nvert: int, fixed: dict[int, int],
            factors: list[tuple[int, list[tuple[int, int]]]], coeff: int) -> Chain:
    """Assemble target monomials from degree-one factors listed in source order.

    ``factors`` holds (target vertex, [(state, coefficient), ...]); the Koszul
    sign of moving them into target vertex order is applied once.
    """
    coeff *= _permutation_sign([w for w, _ in factors])
    out: Chain = {}
    base = [EMPTY] * nvert
    for w, s in fixed.items():
        base[w] = s
    et = tuple(edges)
    for combo in product(*(alts for _, alts in factors)):
        states = list(base)
        c = coeff
        for (w, _), (s, a) in zip(factors, combo):
            states[w] = s
            c *= a
        key = Monomial(et, tuple(states))
        out[key] = out.get(key, 0) + c
    return {k: v for k, v in out.items() if v}


def map_monomial(f: GraphMorphism, m: Monomial) -> Chain:
    """S(f) on one monomial of the full (or reduced) source complex."""
    src, tgt = f.source, f.target
    edges = [0] * tgt.num_edges
    for e, a in enumerate(m.edges):
        if a:
            edges[f.edge_image[e]] += a
    fixed: dict[int, int] = {}
    factors = []
    for v, s in enumerate(m.states):
        if s == EMPTY:
            continue
        img = f.vertex_image[v]
        if img.edge is not None:
            if s == OCCUPIED:
                edges[img.edge] += 1
                continue
            return {}
        w = img.vertex
        if s == OCCUPIED:
            fixed[w] = OCCUPIED
            continue
        hm = img.half_edge_map()
        h = state_half_edge(s)
        if is_difference(s):
            h0 = src.half_edges_at(v)[0]
            factors.append((w, [(HALF(hm[h]), 1), (HALF(hm[h0]), -1)]))
        else:
            factors.append((w, [(HALF(hm[h]), 1)]))
    return _expand(edges, tgt.num_vertices, fixed, factors, 1)


def map_chain(f: GraphMorphism, chain: Mapping) -> Chain:
    return chain_add(*(map_monomial(f, m) for m in chain), coeffs=list(chain.values()))


def induced_chain_map(f: GraphMorphism, i: int, k: int) -> IntMatrix:
    """S(f): S(Γ1)_{i,k} -> S(Γ2)_{i,k} on full complexes."""
    a = swk_complex(f.source)
    b = swk_complex(f.target)
    return a.matrix_from_map(b, lambda m: map_monomial(f, m), i, k)


class ContractionMap:
    """Chain map S(Γ/e) -> S(Γ) for a non-loop edge e of Γ."""

    def __init__(self, g: Graph, eid: str):
        self.graph = g
        self.edge = g.edge_index(eid)
        if g.is_loop(self.edge):
            raise GraphError(f"edge {eid!r} is a self-loop; use the deletion inclusion")
        self.minor = contract_edge(g, eid)
        a, b = g.endpoints[self.edge]
        self.keep = [x for x in range(g.num_edges) if x != self.edge]
        self.a, self.b = a, b
        self.merged = a if a < b else a - 1

    def vertex(self, u: int) -> int:
        return u if u < self.b else u + 1

    def half_edge(self, h: int) -> int:
        return 2 * self.keep[h >> 1] + (h & 1)

    def __call__(self, m: Monomial) -> Chain:
        g = self.graph
        edges = [0] * g.num_edges
        for x, a in enumerate(m.edges):
            edges[self.keep[x]] = a
        fixed: dict[int, int] = {}
        factors = []
        for u, s in enumerate(m.states):
            if s == EMPTY:
                continue
            if is_difference(s):
                raise ValueError("contraction map is defined on the full complex only")
            if u == self.merged:
                if s == OCCUPIED:
                    edges[self.edge] += 1
                    continue
                ht = self.half_edge(state_half_edge(s))
                vj = g.vertex_of(ht)
                hj = 2 * self.edge + (0 if vj == self.a else 1)
                factors.append((vj, [(HALF(ht), 1), (HALF(hj), -1)]))
                continue
            w = self.vertex(u)
            if s == OCCUPIED:
                fixed[w] = OCCUPIED
            else:
                factors.append((w, [(HALF(self.half_edge(state_half_edge(s))), 1)]))
        return _expand(edges, g.num_vertices, fixed, factors, 1)


def contraction_chain_map(g: Graph, eid: str, i: int, k: int) -> IntMatrix:
    """Matrix of S(minor) -> S(g) where the minor contracts ``eid``.

    For a self-loop the minor is the deletion and the map is the inclusion.
    """
    e = g.edge_index(eid)
    if g.is_loop(e):
        _, inc = delete_edge(g, eid)
        return induced_chain_map(inc, i, k)
    cm = ContractionMap(g, eid)
    return swk_complex(cm.minor).matrix_from_map(swk_complex(g), cm, i, k)


def include_reduced_monomial(g: Graph, m: Monomial) -> Chain:
    """Expand every DIFF(h) state as HALF(h) - HALF(h0)."""
    factors = []
    fixed = {}
    for v, s in enumerate(m.states):
        if s == EMPTY:
            continue
        if s == OCCUPIED:
            fixed[v] = s
        elif is_difference(s):
            h0 = g.half_edges_at(v)[0]
            factors.append((v, [(HALF(state_half_edge(s)), 1), (HALF(h0), -1)]))
        else:
            factors.append((v, [(s, 1)]))
    return _expand(list(m.edges), g.num_vertices, fixed, factors, 1)


def reduced_inclusion(g: Graph, reduced, i: int, k: int) -> IntMatrix:
    """Matrix of the inclusion S̃_U(Γ) -> S(Γ)."""
    U = resolve_vertices(g, reduced)
    isolated = [g.vertices[v] for v in sorted(U) if g.degree(v) == 0]
    if isolated:
        raise GraphError(f"reduction set contains isolated vertices {isolated}")
    red = swk_complex(g, U)
    return red.matrix_from_map(swk_complex(g), lambda m: include_reduced_monomial(g, m), i, k)


def slice_dimension_series(g: Graph, max_degree: int, max_weight: int) -> dict[tuple[int, int], int]:
    """Coefficients of Π_v (1 + t + d(v) x t) / (1 - t)^|E| up to the given bounds."""
    poly = {(0, 0): 1}
    for v in range(g.num_vertices):
        d = g.degree(v)
        new: dict[tuple[int, int], int] = {}
        for (i, k), c in poly.items():
            for di, dk, a in ((0, 0, 1), (0, 1, 1), (1, 1, d)):
                if a and i + di <= max_degree and k + dk <= max_weight:
                    new[(i + di, k + dk)] = new.get((i + di, k + dk), 0) + a * c
        poly = new
    ne = g.num_edges
    out = {}
    for i in range(max_degree + 1):
        for k in range(max_weight + 1):
            s = 0
            for j in range(k + 1):
                c = poly.get((i, j), 0)
                if c:
                    r = k - j
                    s += c * (comb(r + ne - 1, ne - 1) if ne else int(r == 0))
            out[(i, k)] = s
    return out
