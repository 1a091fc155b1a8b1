"""Homology of graph configuration spaces and the structural checks built on it."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Iterable, Mapping

from .complex import (default_reduction, induced_chain_map, reduced_inclusion,
                      resolve_vertices, swk_complex)
from .graph import Graph, GraphError, build_graph, vertex_explosion
from .linalg import (HomologyGroup, IntMatrix, homology_of_pair, induced_on_homology,
                     kernel_basis, rank)
from .formulas import multiset_count


def homology(g: Graph, i: int, k: int, reduced="all") -> HomologyGroup:
    """H_i(B_k(g)) from the weight-k slice of the (reduced) Świątkowski complex."""
    if i < 0 or k < 0:
        raise ValueError("degree and weight must be nonnegative")
    C = swk_complex(g, reduced)
    return homology_of_pair(C.differential(i + 1, k), C.differential(i, k))


def betti_numbers(g: Graph, k: int, i_max: int | None = None, reduced="all") -> list[int]:
    C = swk_complex(g, reduced)
    top = min(k, C.max_degree) if i_max is None else i_max
    return [homology(g, i, k, reduced).betti for i in range(top + 1)]


def chain_level_euler(g: Graph, k: int) -> int:
    """Σ_i (-1)^i dim S_i(Γ)_k over the full complex."""
    C = swk_complex(g)
    return sum((-1) ** i * C.dim(i, k) for i in range(min(k, C.max_degree) + 1))


# ---------------------------------------------------------------------------
# tables


@dataclass
class HomologyTable:
    graph: str
    entries: dict[tuple[int, int], HomologyGroup]
    options: dict[str, Any] = field(default_factory=dict)

    def __getitem__(self, ik: tuple[int, int]) -> HomologyGroup:
        return self.entries[ik]

    def rows(self) -> list[dict]:
        return [{"i": i, "k": k, "betti": h.betti, "torsion": list(h.torsion)}
                for (i, k), h in sorted(self.entries.items(), key=lambda t: (t[0][1], t[0][0]))]

    def to_dict(self) -> dict:
        return {"graph": self.graph, "options": dict(self.options), "results": self.rows()}

    @classmethod
    def from_dict(cls, d: Mapping) -> "HomologyTable":
        entries = {(int(r["i"]), int(r["k"])): HomologyGroup(int(r["betti"]), tuple(r["torsion"]))
                   for r in d["results"]}
        return cls(d["graph"], entries, dict(d.get("options", {})))


def _slice_job(args):
    g, i, k, reduced = args
    return homology(g, i, k, reduced)


def homology_table(g: Graph, i_max: int, k_max: int, reduced="all",
                   n_jobs: int | None = 1) -> HomologyTable:
    """All H_i(B_k) for 0 <= i <= i_max, 0 <= k <= k_max."""
    if i_max < 0 or k_max < 0:
        raise ValueError("bounds must be nonnegative")
    U = resolve_vertices(g, reduced)
    slices = [(i, k) for k in range(k_max + 1) for i in range(i_max + 1)]
    workers = (os.cpu_count() or 1) if n_jobs is None else max(1, n_jobs)
    if workers > 1 and len(slices) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            groups = list(pool.map(_slice_job, [(g, i, k, U) for i, k in slices]))
    else:
        groups = [homology(g, i, k, U) for i, k in slices]
    opts = {"max_degree": i_max, "max_weight": k_max,
            "reduced": [g.vertices[v] for v in sorted(U)]}
    return HomologyTable(g.name, dict(zip(slices, groups)), opts)


# ---------------------------------------------------------------------------
# reports


@dataclass
class CheckReport:
    """Outcome of a check; it passes iff it has diagnostics and all of them pass."""
    name: str
    params: dict[str, Any] = field(default_factory=dict)
    diagnostics: list[dict[str, Any]] = field(default_factory=list)

    def add(self, where: str, ok: bool, detail: str = "") -> None:
        self.diagnostics.append({"slice": where, "pass": bool(ok), "detail": detail})

    def skip(self, where: str, reason: str) -> None:
        """Record a slice that was not evaluated; it neither passes nor fails."""
        self.diagnostics.append({"slice": where, "pass": True, "skipped": True, "detail": reason})

    def evaluated(self) -> list[dict[str, Any]]:
        return [d for d in self.diagnostics if not d.get("skipped")]

    @property
    def passed(self) -> bool:
        done = self.evaluated()
        return bool(done) and all(d["pass"] for d in done)

    def failures(self) -> list[dict[str, Any]]:
        return [d for d in self.diagnostics if not d["pass"]]

    def summary(self) -> str:
        done = self.evaluated()
        bad = len(self.failures())
        skipped = len(self.diagnostics) - len(done)
        tail = f", {skipped} skipped" if skipped else ""
        return f"{self.name}: {'pass' if self.passed else 'FAIL'} ({len(done) - bad}/{len(done)} slices{tail})"

    def to_dict(self) -> dict:
        return {"name": self.name, "pass": self.passed, "params": dict(self.params),
                "detail": [dict(d) for d in self.diagnostics]}

    @classmethod
    def from_dict(cls, d: Mapping) -> "CheckReport":
        return cls(d["name"], dict(d.get("params", {})), [dict(x) for x in d.get("detail", [])])


def verify_reduced_quasi_iso(g: Graph, reduced="all", i_max: int = 2, k_max: int = 4) -> CheckReport:
    """The inclusion of the reduced complex induces isomorphisms over Z."""
    U = resolve_vertices(g, reduced)
    isolated = [g.vertices[v] for v in sorted(U) if g.degree(v) == 0]
    if isolated:
        raise GraphError(f"reduction set contains isolated vertices {isolated}")
    R, F = swk_complex(g, U), swk_complex(g)
    rep = CheckReport("reduced_quasi_iso", {"graph": g.name, "reduced": [g.vertices[v] for v in sorted(U)],
                                            "max_degree": i_max, "max_weight": k_max})
    for k in range(k_max + 1):
        for i in range(i_max + 1):
            iota = reduced_inclusion(g, U, i, k)
            m = induced_on_homology(iota, R.differential(i + 1, k), R.differential(i, k),
                                    F.differential(i + 1, k), F.differential(i, k))
            rep.add(f"i={i},k={k}", m.isomorphism and m.source == m.target,
                    f"reduced {m.source}, full {m.target}")
    return rep


def verify_edge_injectivity(g: Graph, i_max: int = 2, k_max: int = 3, reduced="all") -> CheckReport:
    """Multiplication by each edge is injective H_i(B_k) -> H_i(B_{k+1}) over Z.

    Runs on the reduced complex: its inclusion commutes with edge
    multiplication and is a quasi-isomorphism.
    """
    C = swk_complex(g, reduced)
    rep = CheckReport("edge_injectivity", {"graph": g.name, "max_degree": i_max, "max_weight": k_max})
    for e in range(g.num_edges):
        for k in range(k_max + 1):
            for i in range(i_max + 1):
                f = C.edge_multiplication(e, i, k)
                m = induced_on_homology(f, C.differential(i + 1, k), C.differential(i, k),
                                        C.differential(i + 1, k + 1), C.differential(i, k + 1))
                rep.add(f"e={g.edges[e]},i={i},k={k}", m.injective, f"{m.source} -> {m.target}")
    if g.num_edges == 0:
        rep.add("no edges", True, "vacuous")
    return rep


def _rank_on_homology(images: list[IntMatrix], boundaries: IntMatrix) -> int:
    """dim_Q of (span of image columns + boundaries) / boundaries."""
    images = [m for m in images if m.ncols]
    if not images:
        return 0
    rb = rank(boundaries) if boundaries.ncols else 0
    return rank(IntMatrix.hstack(images + ([boundaries] if boundaries.ncols else []))) - rb


def les_check(g: Graph, vertex: str, h0: int | None = None, k_max: int = 3,
              check_map: bool = True) -> CheckReport:
    """Rank exactness of the long exact sequence of the explosion at ``vertex``.

    With a_n = dim H_n(B_k(Γ_v)), b_n = dim H_n(B_k(Γ)) and the connecting map
    δ_n: ⊕_{h≠h0} H_{n-1}(B_{k-1}(Γ_v)) -> H_{n-1}(B_k(Γ_v)), β_h ↦ (e(h)-e(h0))β_h,
    exactness is equivalent to b_n = (a_n - rank δ_{n+1}) + (c_n - rank δ_n).
    With ``check_map`` the rank of the map induced by the explosion morphism
    is also compared with a_n - rank δ_{n+1}.
    """
    v = g.vertex_index(vertex)
    hs = g.half_edges_at(v)
    if not hs:
        raise GraphError(f"vertex {vertex!r} is isolated")
    if h0 is None:
        h0 = hs[0]
    if h0 not in hs:
        raise GraphError(f"half-edge {h0} is not at vertex {vertex!r}")
    others = [h for h in hs if h != h0]
    gv, phi = vertex_explosion(g, vertex)
    R = swk_complex(gv, "all")
    edge_ids = {h: gv.edge_index(g.edges[h >> 1]) for h in hs}
    rep = CheckReport("vertex_les", {"graph": g.name, "vertex": vertex,
                                     "base_half_edge": g.half_edge_label(h0), "max_weight": k_max})

    def delta_rank(n: int, k: int) -> int:
        if n < 1 or k < 1:
            return 0
        K = kernel_basis(R.differential(n - 1, k - 1))
        if K.ncols == 0:
            return 0
        imgs = []
        for h in others:
            M = (R.edge_multiplication(edge_ids[h], n - 1, k - 1)
                 - R.edge_multiplication(edge_ids[h0], n - 1, k - 1))
            imgs.append(M @ K)
        return _rank_on_homology(imgs, R.differential(n, k))

    for k in range(k_max + 1):
        top = min(k, max(R.max_degree, swk_complex(g, "all").max_degree)) + 1
        a = [homology(gv, n, k).betti for n in range(top + 1)]
        b = [homology(g, n, k).betti for n in range(top + 1)]
        c = [len(others) * homology(gv, n - 1, k - 1).betti if n >= 1 and k >= 1 else 0
             for n in range(top + 1)]
        drank = [delta_rank(n, k) for n in range(top + 2)]
        for n in range(top + 1):
            coker = a[n] - drank[n + 1]
            ker = c[n] - drank[n]
            ok = b[n] == coker + ker
            detail = f"a={a[n]} b={b[n]} c={c[n]} rank δ_n={drank[n]} rank δ_n+1={drank[n + 1]}"
            if check_map:
                Fv, Fg = swk_complex(gv), swk_complex(g)
                f = induced_chain_map(phi, n, k)
                K = kernel_basis(Fv.differential(n, k))
                rphi = _rank_on_homology([f @ K], Fg.differential(n + 1, k)) if K.ncols else 0
                ok = ok and rphi == coker
                detail += f" rank φ={rphi}"
            rep.add(f"n={n},k={k}", ok, detail)
    return rep


def component_subgraphs(g: Graph) -> list[Graph]:
    out = []
    for comp in g.components():
        keep = set(comp)
        vids = [g.vertices[v] for v in sorted(keep)]
        edges = [(g.vertices[a], g.vertices[b]) for a, b in g.endpoints if a in keep]
        eids = [g.edges[e] for e, (a, _) in enumerate(g.endpoints) if a in keep]
        out.append(build_graph(vids, edges, eids, name=f"{g.name}[{vids[0]}]"))
    return out


def _generator_counts(g: Graph, i_max: int, k_max: int) -> dict[tuple[int, int], int]:
    """First differences in weight of dim H_i(B_k): free generators over Q[e]."""
    dims = {(i, k): homology(g, i, k).betti for i in range(i_max + 1) for k in range(k_max + 1)}
    return {(i, k): dims[(i, k)] - (dims[(i, k - 1)] if k else 0) for (i, k) in dims}


def one_bridge_check(g: Graph, vertex: str, k_max: int = 3) -> CheckReport:
    """Rational Künneth formula over Q[e] across a separating bivalent vertex."""
    v = g.vertex_index(vertex)
    if g.degree(v) != 2 or any(g.is_loop(h >> 1) for h in g.half_edges_at(v)):
        raise GraphError(f"vertex {vertex!r} is not a bivalent non-loop vertex")
    gv, _ = vertex_explosion(g, vertex)
    if len(gv.components()) != len(g.components()) + 1:
        raise GraphError(f"removing {vertex!r} does not disconnect its component")
    comps = component_subgraphs(gv)
    new_ids = {gv.vertices[x] for x in range(gv.num_vertices)} - set(g.vertices)
    sides = [c for c in comps if new_ids & set(c.vertices)]
    rest = [c for c in comps if not new_ids & set(c.vertices)]
    if len(sides) != 2:
        raise GraphError(f"removing {vertex!r} does not separate its two half-edges")
    rep = CheckReport("one_bridge", {"graph": g.name, "vertex": vertex, "max_weight": k_max})
    i_max = k_max
    gens = [_generator_counts(s, i_max, k_max) for s in sides]
    # tensor over Q[e] of the two free modules
    pred = {(n, k): 0 for n in range(i_max + 1) for k in range(k_max + 1)}
    for (i, a), x in gens[0].items():
        for (j, b), y in gens[1].items():
            for k in range(a + b, k_max + 1):
                if i + j <= i_max:
                    pred[(i + j, k)] += x * y
    # remaining components enter by the ordinary Künneth formula
    for other in rest:
        dims = {(i, k): homology(other, i, k).betti for i in range(i_max + 1) for k in range(k_max + 1)}
        pred = _convolve(pred, dims, i_max, k_max)
    for k in range(k_max + 1):
        for n in range(i_max + 1):
            actual = homology(g, n, k).betti
            rep.add(f"n={n},k={k}", actual == pred[(n, k)], f"actual {actual}, predicted {pred[(n, k)]}")
    return rep


def _convolve(a: Mapping, b: Mapping, i_max: int, k_max: int) -> dict:
    out = {(n, k): 0 for n in range(i_max + 1) for k in range(k_max + 1)}
    for (i, x), p in a.items():
        for (j, y), q in b.items():
            if i + j <= i_max and x + y <= k_max:
                out[(i + j, x + y)] += p * q
    return out


def kunneth_check(g1: Graph, g2: Graph, union: Graph, i_max: int, k_max: int) -> CheckReport:
    """dim H_n(B_k(Γ1 ⊔ Γ2)) = Σ dim H_i(B_a(Γ1)) dim H_j(B_b(Γ2)) over Q."""
    d1 = {(i, k): homology(g1, i, k).betti for i in range(i_max + 1) for k in range(k_max + 1)}
    d2 = {(i, k): homology(g2, i, k).betti for i in range(i_max + 1) for k in range(k_max + 1)}
    pred = _convolve(d1, d2, i_max, k_max)
    rep = CheckReport("disjoint_union_kunneth", {"graph": union.name, "max_degree": i_max, "max_weight": k_max})
    for (n, k), p in sorted(pred.items()):
        actual = homology(union, n, k).betti
        rep.add(f"n={n},k={k}", actual == p, f"actual {actual}, predicted {p}")
    return rep


def unitrivalent_data(g: Graph) -> tuple[int, int]:
    """(N, r): trivalent vertex count and number of trivalent vertices with a self-loop."""
    degs = g.degrees()
    if any(d not in (1, 3) for d in degs):
        raise GraphError(f"graph {g.name!r} is not unitrivalent")
    N = sum(1 for d in degs if d == 3)
    r = sum(1 for v, d in enumerate(degs)
            if d == 3 and any(g.is_loop(h >> 1) for h in g.half_edges_at(v)))
    return N, r


def unitrivalent_top_check(g: Graph, k_min: int = 0, k_max: int | None = None,
                           torsion_degrees: Iterable[int] | None = None) -> CheckReport:
    """Top-degree ranks, codimension-one ranks (simple graphs) and torsion-freeness."""
    N, r = unitrivalent_data(g)
    ne = g.num_edges
    wt = 2 * N - r
    if k_max is None:
        k_max = wt + 1
    simple = g.is_simple()
    rep = CheckReport("unitrivalent_top", {"graph": g.name, "N": N, "self_loops": r,
                                           "canonical_weight": wt, "k_min": k_min, "k_max": k_max})
    if torsion_degrees is None:
        torsion_degrees = [N, N - 1] + ([N - 2] if simple else [])
    torsion_degrees = [d for d in torsion_degrees if d >= 0]
    for k in range(k_min, k_max + 1):
        h = homology(g, N, k)
        expect = multiset_count(ne, k - wt)
        rep.add(f"top,k={k}", h.betti == expect, f"H_{N} = {h}, expected rank {expect}")
        if simple and N >= 1:
            h1 = homology(g, N - 1, k)
            expect1 = N * multiset_count(ne - 2, k - (2 * N - 2))
            rep.add(f"codim1,k={k}", h1.betti == expect1, f"H_{N - 1} = {h1}, expected rank {expect1}")
        for d in torsion_degrees:
            hd = homology(g, d, k)
            rep.add(f"torsion-free,i={d},k={k}", not hd.torsion, f"H_{d} = {hd}")
    return rep



# ---------------------------------------------------------------------------
# invariant suites


def differential_check(g: Graph, i_max: int, k_max: int, reduced=None) -> CheckReport:
    """∂∂ = 0, and ∂ lowers degree by one while preserving weight."""
    C = swk_complex(g, reduced)
    rep = CheckReport("differential_squared_zero", {"graph": g.name, "max_degree": i_max,
                                                    "max_weight": k_max,
                                                    "reduced": sorted(g.vertices[v] for v in C.reduced)})
    for k in range(k_max + 1):
        for i in range(1, i_max + 2):
            d1, d2 = C.differential(i, k), C.differential(i + 1, k)
            shapes = d1.shape == (C.dim(i - 1, k), C.dim(i, k))
            rep.add(f"i={i},k={k}", shapes and (d1 @ d2).is_zero(), f"{d1.shape} @ {d2.shape}")
    return rep


def edge_linearity_check(g: Graph, i_max: int, k_max: int, reduced=None) -> CheckReport:
    """∂ M_e = M_e ∂ and M_e M_e' = M_e' M_e on every slice."""
    C = swk_complex(g, reduced)
    rep = CheckReport("edge_linearity", {"graph": g.name, "max_degree": i_max, "max_weight": k_max})
    for k in range(k_max):
        for i in range(i_max + 1):
            for e in range(g.num_edges):
                M = C.edge_multiplication(e, i, k)
                lhs = C.differential(i, k + 1) @ M
                rhs = C.edge_multiplication(e, i - 1, k) @ C.differential(i, k) if i >= 1 else None
                ok = lhs.is_zero() if rhs is None else lhs == rhs
                if k + 1 < k_max:
                    for e2 in range(e + 1, g.num_edges):
                        a = C.edge_multiplication(e2, i, k + 1) @ M
                        b = C.edge_multiplication(e, i, k + 1) @ C.edge_multiplication(e2, i, k)
                        ok = ok and a == b
                rep.add(f"e={g.edges[e]},i={i},k={k}", ok)
    if g.num_edges == 0:
        rep.add("no edges", True, "vacuous")
    return rep


def euler_check(g: Graph, k_max: int, homology_sum: bool = True) -> CheckReport:
    """Closed formula = chain-level alternating sum = series coefficient (= Σ(-1)^i betti_i)."""
    from .formulas import euler_characteristic, euler_poincare_coeffs
    series = euler_poincare_coeffs(g, k_max)
    rep = CheckReport("euler_characteristic", {"graph": g.name, "max_weight": k_max})
    for k in range(k_max + 1):
        f = euler_characteristic(g, k)
        c = chain_level_euler(g, k)
        vals = [f, c, series[k]]
        detail = f"formula={f} chain-sum={c} series={series[k]}"
        if homology_sum:
            hs = sum((-1) ** i * b for i, b in enumerate(betti_numbers(g, k)))
            vals.append(hs)
            detail += f" homology={hs}"
        rep.add(f"k={k}", len(set(vals)) == 1, detail)
    return rep
