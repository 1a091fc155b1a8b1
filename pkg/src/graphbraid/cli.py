"""Command-line interface: ``graphbraid <command> <graph file> [options]``.

Exit status is 0 when every check passes, 1 when a check fails and 2 on a
usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .graph import Graph, GraphError, parse_graph_text
from .homology import (CheckReport, differential_check, edge_linearity_check, euler_check,
                       homology, homology_table, unitrivalent_top_check,
                       verify_edge_injectivity, verify_reduced_quasi_iso)
from .linalg import ChainComplexError

FORMATS = ("text", "json", "csv")


class UsageError(Exception):
    pass


def parse_graph_file(path: str | Path) -> Graph:
    """Read a graph file; errors carry ``path:line:column``."""
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from None
    g = parse_graph_text(text, source=str(path))
    return g if g.name else g.renamed(p.stem)


@dataclass
class RunConfig:
    command: str
    path: str | None = None
    degree: int | None = None
    weight: int | None = None
    max_degree: int | None = None
    max_weight: int | None = None
    reduced: bool = True
    fmt: str = "text"
    max_cells: int = 2_000_000
    jobs: int | None = None

    def __post_init__(self):
        for name in ("degree", "weight", "max_degree", "max_weight", "max_cells"):
            v = getattr(self, name)
            if v is not None and v < 0:
                raise UsageError(f"--{name.replace('_', '-')} must be nonnegative")
        if self.fmt not in FORMATS:
            raise UsageError(f"unknown format {self.fmt!r}")
        if self.jobs is not None and self.jobs < 1:
            raise UsageError("--jobs must be positive")


@dataclass
class Outcome:
    graph: str
    command: str
    options: dict[str, Any]
    results: list[dict[str, Any]] = field(default_factory=list)
    checks: list[CheckReport] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {"graph": self.graph, "command": self.command, "options": self.options,
                "results": self.results,
                "checks": [{"name": c.name, "pass": c.passed, "detail": c.diagnostics}
                           for c in self.checks]}


def _group_row(i: int, k: int, h) -> dict:
    return {"i": i, "k": k, "betti": h.betti, "torsion": list(h.torsion)}


def _group_text(row: dict) -> str:
    parts = []
    b = row["betti"]
    if b:
        parts.append("Z" if b == 1 else f"Z^{b}")
    parts += [f"Z/{t}" for t in row["torsion"]]
    return " + ".join(parts) or "0"


def run(cfg: RunConfig) -> Outcome:
    from . import classes, oracle

    if cfg.command == "relations":
        rep = classes.relation_suite()
        return Outcome("suite", "relations", {}, [], [rep])
    if cfg.path is None:
        raise UsageError(f"{cfg.command} needs a graph file")
    g = parse_graph_file(cfg.path)
    reduced = "all" if cfg.reduced else None
    opts: dict[str, Any] = {}
    out = Outcome(g.name, cfg.command, opts)

    if cfg.command == "homology":
        if cfg.degree is None or cfg.weight is None:
            raise UsageError("homology needs --degree and --weight")
        opts.update(degree=cfg.degree, weight=cfg.weight, reduced=cfg.reduced)
        out.results.append(_group_row(cfg.degree, cfg.weight, homology(g, cfg.degree, cfg.weight, reduced)))
    elif cfg.command == "table":
        i_max = 2 if cfg.max_degree is None else cfg.max_degree
        k_max = 3 if cfg.max_weight is None else cfg.max_weight
        opts.update(max_degree=i_max, max_weight=k_max, reduced=cfg.reduced)
        table = homology_table(g, i_max, k_max, reduced, n_jobs=cfg.jobs)
        out.results = table.rows()
    elif cfg.command == "oracle":
        k_max = cfg.weight if cfg.weight is not None else (3 if cfg.max_weight is None else cfg.max_weight)
        i_max = k_max if cfg.max_degree is None else cfg.max_degree
        k_min = k_max if cfg.weight is not None else 0
        opts.update(max_degree=i_max, weights=[k_min, k_max], max_cells=cfg.max_cells)
        rep = oracle.cross_check(g, i_max, k_max, cfg.max_cells, k_min=k_min)
        out.results = [d["oracle"] for d in rep.diagnostics if "oracle" in d]
        out.checks.append(rep)
    elif cfg.command == "euler":
        k_max = 5 if cfg.max_weight is None else cfg.max_weight
        opts.update(max_weight=k_max)
        rep = euler_check(g, k_max, homology_sum=False)
        for d in rep.diagnostics:
            vals = dict(kv.split("=") for kv in d["detail"].split())
            out.results.append({"k": int(d["slice"][2:]), **{k: int(v) for k, v in vals.items()}})
        out.checks.append(rep)
    elif cfg.command == "check":
        i_max = 2 if cfg.max_degree is None else cfg.max_degree
        k_max = 3 if cfg.max_weight is None else cfg.max_weight
        opts.update(max_degree=i_max, max_weight=k_max)
        out.checks += [differential_check(g, i_max, k_max), differential_check(g, i_max, k_max, "all"),
                       edge_linearity_check(g, i_max, k_max), euler_check(g, k_max)]
        if not any(g.degree(v) == 0 for v in range(g.num_vertices)):
            out.checks.append(verify_reduced_quasi_iso(g, "all", i_max, k_max))
        out.checks.append(verify_edge_injectivity(g, i_max, k_max))
        if g.num_vertices and all(d in (1, 3) for d in g.degrees()):
            out.checks.append(unitrivalent_top_check(g, 0, k_max))
    else:
        raise UsageError(f"unknown command {cfg.command!r}")
    return out


def render(out: Outcome, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(out.to_dict(), indent=2, sort_keys=True, ensure_ascii=False) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if out.results:
            keys = list(out.results[0].keys())
            w.writerow(keys)
            for r in out.results:
                w.writerow([";".join(map(str, r[k])) if isinstance(r[k], list) else r[k] for k in keys])
        if out.checks:
            if out.results:
                w.writerow([])
            w.writerow(["check", "slice", "pass", "detail"])
            for c in out.checks:
                for d in c.diagnostics:
                    status = "skipped" if d.get("skipped") else str(d["pass"]).lower()
                    w.writerow([c.name, d["slice"], status, d.get("detail", "")])
        return buf.getvalue()
    lines = [f"graph {out.graph}: {out.command}"]
    for r in out.results:
        if "betti" in r:
            lines.append(f"  H_{r['i']}(B_{r['k']}) = {_group_text(r)}")
        else:
            rest = " ".join(f"{k}={v}" for k, v in r.items() if k != "k")
            lines.append(f"  k={r['k']}: {rest}")
    for c in out.checks:
        lines.append("  " + c.summary())
        for d in c.diagnostics:
            if not d["pass"] or d.get("skipped"):
                tag = "skipped" if d.get("skipped") else "FAIL"
                lines.append(f"    {tag} {d['slice']}: {d.get('detail', '')}")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="graphbraid",
                                description="Homology of unordered configuration spaces of graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, needs_file=True):
        if needs_file:
            sp.add_argument("graph", help="graph file (graph/vertex/edge lines)")
        sp.add_argument("--format", dest="fmt", choices=FORMATS, default="text")

    sp = sub.add_parser("homology", help="one slice H_i(B_k)")
    common(sp)
    sp.add_argument("--degree", "-i", type=int, required=True)
    sp.add_argument("--weight", "-k", type=int, required=True)
    sp.add_argument("--full", action="store_true", help="use the unreduced complex")

    sp = sub.add_parser("table", help="H_i(B_k) for a rectangle of slices")
    common(sp)
    sp.add_argument("--max-degree", type=int, default=2)
    sp.add_argument("--max-weight", type=int, default=3)
    sp.add_argument("--full", action="store_true", help="use the unreduced complex")
    sp.add_argument("--jobs", type=int, default=None, help="worker processes (default: all cores)")

    sp = sub.add_parser("oracle", help="cross-check against the cube-complex oracle")
    common(sp)
    sp.add_argument("--weight", "-k", type=int, help="a single weight")
    sp.add_argument("--max-weight", type=int, help="all weights up to this one (default 3)")
    sp.add_argument("--max-degree", type=int)
    sp.add_argument("--max-cells", type=int, default=2_000_000)

    sp = sub.add_parser("euler", help="Euler characteristics: formula, chain sum, series")
    common(sp)
    sp.add_argument("--max-weight", type=int, default=5)

    sp = sub.add_parser("relations", help="relation and nontriviality suite")
    common(sp, needs_file=False)

    sp = sub.add_parser("check", help="run the invariant suites on a graph")
    common(sp)
    sp.add_argument("--max-degree", type=int, default=2)
    sp.add_argument("--max-weight", type=int, default=3)
    return p


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    return RunConfig(command=ns.command, path=getattr(ns, "graph", None),
                     degree=getattr(ns, "degree", None), weight=getattr(ns, "weight", None),
                     max_degree=getattr(ns, "max_degree", None),
                     max_weight=getattr(ns, "max_weight", None),
                     reduced=not getattr(ns, "full", False), fmt=ns.fmt,
                     max_cells=getattr(ns, "max_cells", 2_000_000), jobs=getattr(ns, "jobs", None))


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        cfg = config_from_args(ns)
        out = run(cfg)
    except (UsageError, GraphError) as exc:
        print(f"graphbraid: error: {exc}", file=sys.stderr)
        return 2
    except ChainComplexError as exc:
        print(f"graphbraid: internal error: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(render(out, cfg.fmt))
    return 0 if out.passed else 1


if __name__ == "__main__":
    sys.exit(main())
