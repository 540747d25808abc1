import json
import os

import pytest

from config import OUTPUT_SCHEMAS
from data_io import validate_payload
from main import RunConfig, main
from errors import DomainError

TRIANGLE = "3 3\n0 1\n0 2\n1 2\n"
SINGLE_EDGE = "2 1\n0 1\n"


def run_json(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    payload = json.loads(out) if code == 0 and out.strip() else None
    if payload is not None:
        assert validate_payload(payload, OUTPUT_SCHEMAS[argv[0]]) == []
    return code, payload


@pytest.mark.parametrize("d, parts, expected", [
    ("3", "2,2,1", 24),
    ("2", "3,1,1", 16),
    ("1", "4,2,1", 0),
    ("3", "1,2,2", 24),
])
def test_solve(capsys, d, parts, expected):
    code, payload = run_json(capsys, "solve", "--d", d, "--parts", parts)
    assert code == 0
    assert payload["value"] == expected
    assert payload["seed"] == 42
    assert all("mu" in t for t in payload["argmax"])


def test_solve_multipartite_and_text_output(capsys):
    code = main(["solve", "--d", "2", "--parts", "1,1,1,1", "--output", "text"])
    out = capsys.readouterr().out
    assert code == 0
    assert "K_{1,1,1,1}, d=2: 12" in out


@pytest.mark.parametrize("parts", ["2,x,1", "3", "2,,1"])
def test_solve_invalid_parts_is_usage_error(capsys, parts):
    assert main(["solve", "--d", "2", "--parts", parts]) == 2


def test_missing_required_option_is_usage_error(capsys):
    assert main(["solve", "--parts", "1,1,1"]) == 2
    assert main(["brute", "--d", "2"]) == 2


def test_closed_form_reports_printed_value(capsys):
    code, payload = run_json(capsys, "closed-form", "--d", "2", "--parts", "2,2,1")
    assert code == 0
    values = payload["values"]
    assert values["closed_form"] == 16
    assert values["printed"] == 21
    assert values["matches_printed"] is False
    assert values["xi_at_argmax"] == 16


def test_closed_form_without_formula(capsys):
    code, payload = run_json(capsys, "closed-form", "--d", "4", "--parts", "2,2,1")
    assert code == 0
    assert payload["values"]["closed_form"] is None


def test_brute_from_parts(capsys):
    code, payload = run_json(capsys, "brute", "--d", "2", "--parts", "1,1,1")
    assert code == 0
    assert payload["value"] == pytest.approx(6.0, abs=1e-6)
    assert payload["edges"] == 3


@pytest.mark.parametrize("text, d, expected", [(TRIANGLE, "3", 12.0), (SINGLE_EDGE, "2", 4.0)])
def test_brute_from_graph_file(capsys, edge_file, text, d, expected):
    code, payload = run_json(capsys, "brute", "--d", d, "--graph", edge_file(text))
    assert code == 0
    assert payload["value"] == pytest.approx(expected, abs=1e-6)


def test_brute_lanczos(capsys):
    code, payload = run_json(capsys, "brute", "--d", "2", "--parts", "3,2,1", "--method", "lanczos")
    assert code == 0
    assert payload["method"] == "lanczos"
    assert payload["value"] == pytest.approx(24.0, abs=1e-6)


def test_brute_bad_graph_file(capsys, edge_file):
    assert main(["brute", "--d", "2", "--graph", edge_file("4 1\n0 5\n")]) == 2
    assert main(["brute", "--d", "2", "--graph", "/nonexistent/graph.edges"]) == 2


def test_brute_parts_and_graph_are_exclusive(capsys, edge_file):
    assert main(["brute", "--d", "2", "--parts", "1,1", "--graph", edge_file(SINGLE_EDGE)]) == 2


def test_brute_size_guard(capsys):
    assert main(["brute", "--d", "2", "--parts", "12,12"]) == 3


def test_brute_convergence_failure(capsys):
    assert main(["brute", "--d", "2", "--parts", "2,2,1", "--max-iters", "1"]) == 3
    assert "rayleigh" in capsys.readouterr().err


def test_verify_reports_discrepancy(capsys):
    code, payload = run_json(capsys, "verify", "--max-n", "5")
    assert code == 0
    assert payload["passed"] is True
    assert payload["checks"] == ["tripartite"]
    assert all(row["status"] == "PASS" for row in payload["results"])
    assert {"d": 2, "parts": [2, 2, 1], "printed": 21, "computed": 16} in payload["discrepancies"]


def test_verify_clique(capsys):
    code, payload = run_json(capsys, "verify", "--max-n", "5", "--checks", "clique")
    assert code == 0
    rows = payload["results"]
    assert {row["check"] for row in rows} == {"clique"}
    assert max(row["n"] for row in rows) == 5


def test_verify_other_checks(capsys):
    code, payload = run_json(capsys, "verify", "--max-n", "5", "--checks", "complement,height,eta")
    assert code == 0
    assert payload["passed"] is True
    assert {row["check"] for row in payload["results"]} == {"complement", "height", "eta"}


def test_verify_unknown_check(capsys):
    assert main(["verify", "--checks", "bogus"]) == 2


@pytest.mark.slow
def test_verify_default_bounds(capsys):
    code, payload = run_json(capsys, "verify")
    assert code == 0
    assert payload["passed"] is True


@pytest.mark.parametrize("lam, factors, expected", [
    ("3,3,2", "2,1/3/2", 1),
    ("2,1", "1/1,1", 1),
    ("3,2,1", "2,1/2,1", 2),
])
def test_lr_with_direct_count(capsys, lam, factors, expected):
    code, payload = run_json(capsys, "lr", "--lambda", lam, "--factors", factors, "--direct")
    assert code == 0
    assert payload["coefficient"] == expected
    assert payload["direct"] == expected
    assert payload["agree"] is True


def test_lr_balanced_factors(capsys):
    code, payload = run_json(capsys, "lr", "--lambda", "3,3,2", "--factors", "2,1/2,1/2")
    assert code == 0
    assert payload["coefficient"] >= 1


def test_lr_rejects_non_partition(capsys):
    assert main(["lr", "--lambda", "1,2", "--factors", "1/2"]) == 2


def test_eta(capsys):
    code, payload = run_json(capsys, "eta", "--lambda", "2,1", "--d", "2")
    assert code == 0
    assert payload["eta_rows"] == payload["eta_contents"] == 6
    assert payload["dim_irrep"] == 2
    assert payload["weyl_dim"] == 2


def test_eta_height_violation(capsys):
    assert main(["eta", "--lambda", "1,1,1", "--d", "2"]) == 2


def test_sweep_d3_matches_closed_form(capsys):
    code, payload = run_json(capsys, "sweep", "--d", "3", "--max-n", "6")
    assert code == 0
    rows = payload["rows"]
    assert len(rows) == 7
    for row in rows:
        assert row["search_value"] == row["closed_form_value"]
        assert row["oracle_value"] == pytest.approx(row["search_value"], abs=1e-6)


def test_sweep_d2_dominant_rows(capsys):
    code, payload = run_json(capsys, "sweep", "--d", "2", "--max-n", "7")
    assert code == 0
    for row in payload["rows"]:
        if row["p"] >= row["q"] + row["r"]:
            assert row["search_value"] == 2 * (row["n"] - row["p"]) * (row["p"] + 1)


def test_sweep_oracle_column_respects_budget(capsys):
    code, payload = run_json(capsys, "sweep", "--d", "3", "--min-n", "8", "--max-n", "8")
    assert code == 0
    assert payload["rows"]
    assert all(row["oracle_value"] is None for row in payload["rows"])


def test_sweep_text_is_deterministic(capsys):
    main(["sweep", "--d", "2", "--max-n", "5", "--output", "text"])
    first = capsys.readouterr().out
    main(["sweep", "--d", "2", "--max-n", "5", "--output", "text"])
    second = capsys.readouterr().out
    assert first == second
    lines = first.splitlines()
    assert lines[0] == "p\tq\tr\tn\td\tsearch_value\tclosed_form_value\toracle_value"
    assert lines[1].startswith("1\t1\t1\t3\t2\t6\t6\t")


def test_sweep_excel_export(capsys, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    assert main(["sweep", "--d", "3", "--max-n", "4", "--excel"]) == 0
    exported = os.listdir(tmp_path / "data")
    assert len(exported) == 1
    assert exported[0].startswith("qmc_sweep_")


def test_spectrum(capsys, edge_file):
    code, payload = run_json(capsys, "spectrum", "--d", "2", "--graph", edge_file(SINGLE_EDGE))
    assert code == 0
    assert payload["eigenvalues"] == pytest.approx([0, 0, 0, 4], abs=1e-6)
    assert payload["trace"] == pytest.approx(payload["expected_trace"], rel=1e-6)


def test_spectrum_export(capsys, tmp_path):
    target = tmp_path / "k111.txt"
    code = main(["spectrum", "--d", "2", "--parts", "1,1,1", "--export", str(target), "--output", "text"])
    assert code == 0
    lines = target.read_text(encoding="utf-8").splitlines()
    assert len(lines) == 8
    values = [float(x) for x in lines]
    assert values == sorted(values)
    assert values[-1] == pytest.approx(6.0, abs=1e-6)


def test_spectrum_size_guard(capsys):
    assert main(["spectrum", "--d", "2", "--parts", "7,6"]) == 3


def test_run_config_invariants():
    with pytest.raises(DomainError):
        RunConfig(command="brute", d=2)
    with pytest.raises(DomainError):
        RunConfig(command="brute", d=2, parts=[1, 1], graph_file="g.edges")
    with pytest.raises(DomainError):
        RunConfig(command="launch")
    with pytest.raises(DomainError):
        RunConfig(command="solve", d=0, parts=[1, 1, 1])
