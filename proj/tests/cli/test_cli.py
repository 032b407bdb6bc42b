import json

import jsonschema
import pytest

from conftest import SOURCE

DATA = "tests/data"


def validate(doc, schema):
    jsonschema.Draft202012Validator(schema).validate(doc)


def test_check_valid(run, schema):
    r = run("check", f"{DATA}/double.tri", "--format", "json")
    assert r.code == 0
    doc = r.json()
    validate(doc, schema("check"))
    assert doc["skeleton"] == {"vertices": 4, "edges": 6, "triangles": 4, "tetrahedra": 2, "euler": 0}
    assert doc["orientable"] is True


def test_check_invalid(run, schema):
    r = run("check", f"{DATA}/unglued.tri", "--format", "json")
    assert r.code == 1
    doc = r.json()
    validate(doc, schema("check"))
    assert doc["validation"]["valid"] is False
    assert doc["validation"]["issues"][0]["kind"] == "NotClosed"


def test_check_text(run):
    r = run("check", f"{DATA}/double.tri")
    assert r.code == 0
    assert "valid closed orientable" in r.out


def test_parse_error_exit_code(run):
    r = run("check", f"{DATA}/noninvolutive.tri")
    assert r.code == 1
    assert "NonInvolutiveGluing" in r.err


def test_missing_file(run):
    r = run("check", f"{DATA}/does_not_exist.tri")
    assert r.code == 2


def test_petersen_width_golden(run, schema, golden):
    r = run("width", "--graph", f"{DATA}/petersen.txt", "--param", "all")
    assert r.code == 0
    doc = r.json()
    validate(doc, schema("width"))
    assert doc == golden("petersen_width.json")
    assert {rep["param"]: rep["value"] for rep in doc["reports"]} == {"tw": 4, "pw": 5, "cw": 6, "cng": 5}
    assert all(rep["exact"] for rep in doc["reports"])


def test_width_csv(run):
    r = run("width", "--graph", f"{DATA}/cycle5.txt", "--param", "cw", "--format", "csv")
    assert r.code == 0
    lines = r.out.strip().splitlines()
    assert lines[0] == "input,param,value,exact"
    assert lines[1].endswith(",cw,2,true")


def test_width_triangulation_includes_bounds(run, schema):
    r = run("width", f"{DATA}/double.tri", "--param", "all", "--irreducible", "--non-haken")
    assert r.code == 0
    doc = r.json()
    validate(doc, schema("width"))
    lines = doc["bounds"]["bounds"]
    assert {(b["quantity"], b["width"], b["relation"], b["value"]) for b in lines} >= {
        ("L(M)", "cw", "<=", 31),
        ("graph(M)", "cng", "<", 24),
        ("g(M)", "pw", "<=", 16),
        ("g(M)", "tw", "<", 48),
    }


def test_width_without_assertions_has_no_genus_rows(run):
    doc = run("width", f"{DATA}/double.tri", "--param", "all").json()
    assert all(not b["conditional"] for b in doc["bounds"]["bounds"])


def test_heuristic_requires_seed(run):
    r = run("width", "--graph", f"{DATA}/petersen.txt", "--heuristic")
    assert r.code == 1


def test_heuristic_is_deterministic(run):
    a = run("width", "--graph", f"{DATA}/petersen.txt", "--heuristic", "--seed", "5").json()
    b = run("width", "--graph", f"{DATA}/petersen.txt", "--heuristic", "--seed", "5").json()
    assert a == b
    for rep in a["reports"]:
        assert rep["exact"] is False


def test_too_large(run, tmp_path):
    lines = [f"{i} {(i + 1) % 30}" for i in range(30)] + [f"{i} {(i + 7) % 30}" for i in range(30)]
    path = tmp_path / "big.txt"
    path.write_text(f"30 {len(lines)}\n" + "\n".join(lines) + "\n")
    r = run("width", "--graph", path, "--param", "cw")
    assert r.code == 1
    assert "TooLarge" in r.err
    r = run("width", "--graph", path, "--param", "cw", "--heuristic", "--seed", "1")
    assert r.code == 0


def test_witness_files(run, tmp_path):
    out = tmp_path / "w"
    r = run("width", "--graph", f"{DATA}/petersen.txt", "--param", "all", "--witness", out)
    assert r.code == 0
    for param in ("tw", "pw", "cw", "cng"):
        assert (tmp_path / f"w.{param}").stat().st_size > 0
    layout = (tmp_path / "w.cw").read_text()
    assert layout.startswith("layout")


@pytest.mark.parametrize("mode,golden_name", [("linear", "double_linear.json"), ("graph", "double_graph.json")])
def test_certify_golden(run, schema, golden, mode, golden_name):
    r = run("certify", f"{DATA}/double.tri", "--mode", mode)
    assert r.code == 0
    doc = r.json()
    validate(doc, schema("certificate"))
    assert doc == golden(golden_name)
    assert doc["passed"] is True


def test_certify_linear_values(run):
    doc = run("certify", f"{DATA}/double.tri", "--mode", "linear").json()
    assert doc["k"] == 4
    assert doc["bound_3k4"]["value"] == 16
    assert doc["L_upper"]["value"] == 31
    assert doc["max_genus_sum"] <= 16
    assert sum(step["handles_added"] for step in doc["steps"]) == 16


def test_certify_graph_with_host_and_output(run, tmp_path):
    host = tmp_path / "host.txt"
    host.write_text("host 2\narc 0 1\nleaf 0 0\nleaf 1 1\n")
    out = tmp_path / "cert.json"
    r = run("certify", f"{DATA}/double.tri", "--mode", "graph", "--host", host, "--root-arc", "0",
            "--output", out)
    assert r.code == 0
    doc = json.loads(out.read_text())
    assert doc["witness_source"] == "file"
    assert doc["root"]["arc"] == 0
    assert doc["max_top_genus"] < doc["bound_6k"]["value"] == 24


def test_certify_bad_host(run):
    r = run("certify", f"{DATA}/double.tri", "--mode", "graph", "--host", f"{DATA}/k5_host.txt")
    assert r.code == 1


def test_verify_ineq(run, schema):
    r = run("verify-ineq", DATA, "--format", "json")
    assert r.code == 0
    doc = r.json()
    validate(doc, schema("ineq"))
    reports = {row["file"]: row["report"] for row in doc["rows"] if "report" in row}
    assert reports["petersen.txt"]["all_hold"] is True
    assert reports["k5.txt"]["cng"] == 6
    assert doc["summary"]["errors"] > 0
    assert "warning" in r.err


def test_verify_ineq_csv(run):
    r = run("verify-ineq", DATA)
    assert r.code == 0
    header = r.out.splitlines()[0]
    assert header.startswith("file,max_degree,tw,pw,cw,cng")


def test_census(run, schema, golden):
    r = run("census", "--max-tets", "2")
    assert r.code == 0
    doc = r.json()
    validate(doc, schema("census"))
    assert doc == golden("census2.json")
    assert doc["summary"]["per_size"] == {"1": 4, "2": 16}
    assert doc["summary"]["failures"] == 0


def test_census_too_large(run):
    r = run("census", "--max-tets", "4")
    assert r.code == 1


def test_census_text(run):
    r = run("census", "--max-tets", "1", "--format", "text")
    assert r.code == 0
    assert r.out.strip().endswith("4 triangulations, 0 failures")
