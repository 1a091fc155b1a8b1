"""Brute-force oracle: cellular homology of the discrete configuration complex.

A cell of the unordered discrete configuration complex of a graph is a set of
k closed cells (vertices and edges) that are pairwise closure-disjoint; its
dimension is the number of edges.  After subdividing every edge into enough
pieces the complex is homotopy equivalent to B_k(Γ).  Every answer is computed
twice, once more with one extra piece per edge, and must agree.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import comb

from .graph import Graph, subdivide
from .homology import CheckReport, homology
from .linalg import HomologyGroup, IntMatrix, homology_of_pair

DEFAULT_MAX_CELLS = 2_000_000


class StabilizationError(RuntimeError):
    """Homology changed under one more subdivision round."""


class CellLimitExceeded(RuntimeError):
    """The cube complex has more cells than the configured ceiling."""


def sufficient_subdivision(g: Graph, k: int, extra: int = 0) -> Graph:
    """Every edge cut into max(k + 1, 2) + extra pieces."""
    pieces = max(k + 1, 2) + extra
    return subdivide(g, pieces)[0]


def _matchings(g: Graph, d: int) -> list[tuple[int, ...]]:
    """Sets of d edges with pairwise disjoint closures, in lexicographic order."""
    out: list[tuple[int, ...]] = []
    ends = g.endpoints
    ne = g.num_edges
    cur: list[int] = []
    used: set[int] = set()

    def rec(start: int):
        if len(cur) == d:
            out.append(tuple(cur))
            return
        for e in range(start, ne - (d - len(cur)) + 1):
            a, b = ends[e]
            if a in used or b in used:
                continue
            cur.append(e)
            used.update((a, b))
            rec(e + 1)
            used.difference_update((a, b))
            cur.pop()

    rec(0)
    return out


class CubeComplex:
    """Cells and boundary matrices of B_k^□(g') for an already subdivided g'."""

    def __init__(self, g: Graph, k: int, max_cells: int = DEFAULT_MAX_CELLS):
        self.graph = g
        self.k = k
        self.max_cells = max_cells
        self._cells: dict[int, list[tuple[int, ...]]] = {}
        self._index: dict[int, dict[tuple[int, ...], int]] = {}
        self._bd: dict[int, IntMatrix] = {}

    @property
    def max_dimension(self) -> int:
        return self.k

    def count_cells(self, d: int) -> int:
        if d < 0 or d > self.k:
            return 0
        g = self.graph
        nv = g.num_vertices
        return sum(comb(nv - len({x for e in m for x in g.endpoints[e]}), self.k - d)
                   for m in _matchings(g, d))

    def cells(self, d: int) -> list[tuple[int, ...]]:
        """Cells of dimension d as sorted tuples (vertex v -> v, edge e -> |V| + e)."""
        if d not in self._cells:
            if d < 0 or d > self.k:
                self._cells[d] = []
            else:
                n = self.count_cells(d)
                if n > self.max_cells:
                    raise CellLimitExceeded(f"{n} cells in dimension {d} exceed the ceiling {self.max_cells}")
                g = self.graph
                nv = g.num_vertices
                out = []
                for match in _matchings(g, d):
                    blocked = {x for e in match for x in g.endpoints[e]}
                    free = [v for v in range(nv) if v not in blocked]
                    etags = tuple(nv + e for e in match)
                    for vs in combinations(free, self.k - d):
                        out.append(vs + etags)
                out.sort()
                self._cells[d] = out
        return self._cells[d]

    def index(self, d: int) -> dict[tuple[int, ...], int]:
        if d not in self._index:
            self._index[d] = {c: i for i, c in enumerate(self.cells(d))}
        return self._index[d]

    def boundary(self, d: int) -> IntMatrix:
        """∂ = Σ_j (-1)^(j-1) ([e_j -> head] - [e_j -> tail]), edges in index order."""
        if d not in self._bd:
            cols = self.cells(d)
            rows = self.index(d - 1)
            g = self.graph
            nv = g.num_vertices
            entries = {}
            for c, cell in enumerate(cols):
                verts = [x for x in cell if x < nv]
                edges = [x - nv for x in cell if x >= nv]
                for j, e in enumerate(edges):
                    sign = -1 if j % 2 else 1
                    a, b = g.endpoints[e]
                    tail, head = min(a, b), max(a, b)
                    rest = tuple(nv + x for x in edges if x != e)
                    for v, s in ((head, sign), (tail, -sign)):
                        face = tuple(sorted(verts + [v])) + rest
                        key = (rows[face], c)
                        entries[key] = entries.get(key, 0) + s
            self._bd[d] = IntMatrix(len(rows), len(cols), entries)
        return self._bd[d]

    def homology(self, i: int) -> HomologyGroup:
        return homology_of_pair(self.boundary(i + 1), self.boundary(i))

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * len(self.cells(d)) for d in range(self.k + 1))


@lru_cache(maxsize=32)
def _cube_complex(g: Graph, k: int, extra: int, max_cells: int) -> CubeComplex:
    return CubeComplex(sufficient_subdivision(g, k, extra), k, max_cells)


def enumerate_cells(g: Graph, k: int, d: int) -> list[tuple[int, ...]]:
    """Cells of B_k^□(g) for ``g`` taken as is (no further subdivision)."""
    return CubeComplex(g, k).cells(d)


def cube_boundary(g: Graph, k: int, d: int) -> IntMatrix:
    return CubeComplex(g, k).boundary(d)


def oracle_homology(g: Graph, i: int, k: int, max_cells: int = DEFAULT_MAX_CELLS) -> HomologyGroup:
    """H_i(B_k(g)) from the cube complex, certified by one extra subdivision round."""
    first = _cube_complex(g, k, 0, max_cells).homology(i)
    second = _cube_complex(g, k, 1, max_cells).homology(i)
    if first != second:
        raise StabilizationError(f"H_{i}(B_{k}) of {g.name}: {first} changes to {second} "
                                 "after one more subdivision")
    return first


def oracle_euler(g: Graph, k: int, max_cells: int = DEFAULT_MAX_CELLS) -> int:
    return _cube_complex(g, k, 0, max_cells).euler_characteristic()


def component_distribution_count(g: Graph, k: int) -> int:
    """Ways to distribute k unlabeled points over the components of g.

    An isolated vertex holds at most one point; any other component holds any number.
    """
    series = [1] + [0] * k
    for comp in g.components():
        cap = 1 if all(g.degree(v) == 0 for v in comp) and len(comp) == 1 else k
        nxt = [0] * (k + 1)
        for n, c in enumerate(series):
            if c:
                for extra in range(0, min(cap, k - n) + 1):
                    nxt[n + extra] += c
        series = nxt
    return series[k]


def cross_check(g: Graph, i_max: int, k_max: int, max_cells: int = DEFAULT_MAX_CELLS,
                k_min: int = 0) -> CheckReport:
    """Compare Świątkowski homology with the oracle in every slice.

    Each evaluated diagnostic carries the oracle's group under ``"oracle"``.
    """
    rep = CheckReport("oracle_cross_check", {"graph": g.name, "max_degree": i_max, "min_weight": k_min,
                                             "max_weight": k_max, "max_cells": max_cells})
    for k in range(k_min, k_max + 1):
        for i in range(i_max + 1):
            where = f"i={i},k={k}"
            try:
                ora = oracle_homology(g, i, k, max_cells)
            except CellLimitExceeded as exc:
                rep.skip(where, str(exc))
                continue
            except StabilizationError as exc:
                rep.add(where, False, str(exc))
                continue
            swk = homology(g, i, k)
            rep.add(where, ora == swk, f"complex {swk}, oracle {ora}")
            rep.diagnostics[-1]["oracle"] = {"i": i, "k": k, **ora.to_dict()}
    return rep
