import csv
import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from graphbraid.cli import main, parse_graph_file
from graphbraid.graph import standard_graph

GRAPHS = Path(__file__).resolve().parent.parent / "graphs"


def run_cli(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_graph_file(tmp_path):
    k4 = parse_graph_file(GRAPHS / "k4.graph")
    assert k4.name == "k4"
    assert sorted(k4.degrees()) == sorted(standard_graph("complete", 4).degrees())
    p = tmp_path / "loop.graph"
    p.write_text("vertex v\nedge e v v\n")
    g = parse_graph_file(p)
    assert g.name == "loop" and g.is_loop(0)


def test_table_json_contains_complete_graph_entry(capsys):
    code, out, _ = run_cli(capsys, "table", GRAPHS / "k4.graph", "--max-degree", 2, "--max-weight", 3,
                           "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert {"i": 1, "k": 2, "betti": 4, "torsion": []} in data["results"]
    assert data["graph"] == "k4" and data["command"] == "table"


def test_oracle_finds_two_torsion(capsys):
    code, out, _ = run_cli(capsys, "oracle", GRAPHS / "k33.graph", "--weight", 2, "--format", "json")
    assert code == 0
    data = json.loads(out)
    row = next(r for r in data["results"] if r["i"] == 1)
    assert row == {"i": 1, "k": 2, "betti": 4, "torsion": [2]}
    assert all(c["pass"] for c in data["checks"])


def test_euler_rows_agree(capsys):
    code, out, _ = run_cli(capsys, "euler", GRAPHS / "k4.graph", "--max-weight", 5, "--format", "json")
    assert code == 0
    rows = json.loads(out)["results"]
    assert [r["k"] for r in rows] == list(range(6))
    assert all(r["formula"] == r["chain-sum"] == r["series"] for r in rows)


def test_homology_text(capsys):
    code, out, _ = run_cli(capsys, "homology", GRAPHS / "s3.graph", "-i", 1, "-k", 2)
    assert code == 0
    assert "H_1(B_2) = Z" in out


def test_relations_and_check_commands(capsys):
    code, out, _ = run_cli(capsys, "relations")
    assert code == 0 and "relations: pass" in out
    code, out, _ = run_cli(capsys, "check", GRAPHS / "s3.graph", "--max-weight", 3)
    assert code == 0 and "FAIL" not in out


def test_parse_errors_exit_with_two(capsys, tmp_path):
    bad = tmp_path / "bad.graph"
    bad.write_text("vertex a\nedge e a b\n")
    code, _, err = run_cli(capsys, "table", bad)
    assert code == 2 and f"{bad}:2:" in err
    code, _, err = run_cli(capsys, "table", tmp_path / "missing.graph")
    assert code == 2 and "cannot read" in err
    code, _, _ = run_cli(capsys, "table", GRAPHS / "k4.graph", "--max-weight", -1)
    assert code == 2


def test_argparse_usage_errors_exit_with_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["homology", str(GRAPHS / "k4.graph")])
    assert exc.value.code == 2


def test_output_is_byte_identical_across_runs():
    cmd = [sys.executable, "-m", "graphbraid.cli", "table", str(GRAPHS / "theta3.graph"),
           "--max-weight", "3", "--format", "json", "--jobs", "2"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd[:-2] + ["--jobs", "1"], capture_output=True, check=True).stdout
    assert a == b and a


def test_json_round_trip(capsys):
    _, out, _ = run_cli(capsys, "check", GRAPHS / "c1.graph", "--format", "json")
    data = json.loads(out)
    assert json.loads(json.dumps(data, sort_keys=True, indent=2)) == data
    assert {c["name"] for c in data["checks"]} >= {"differential_squared_zero", "edge_injectivity"}
    assert all(set(c) == {"name", "pass", "detail"} for c in data["checks"])


def test_csv_output(capsys):
    code, out, _ = run_cli(capsys, "table", GRAPHS / "c1.graph", "--max-degree", 1, "--max-weight", 2,
                           "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["i", "k", "betti", "torsion"]
    assert ["1", "2", "1", ""] in rows
