import os

import pytest

import data_io
from config import OUTPUT_SCHEMAS, TUPLE_SCHEMA
from data_io import (
    export_table,
    format_spectrum,
    frame_to_tsv,
    log_run_status,
    partition_to_json,
    rows_to_frame,
    solution_from_json,
    solution_to_json,
    tuple_from_json,
    tuple_to_json,
    validate_payload,
)
from lr import ValidTuple
from partitions import Partition
from solver import QmcInstance, solve_search


def P(*parts):
    return Partition(parts)


def test_partition_to_json():
    assert partition_to_json(P(3, 2)) == [3, 2]
    assert partition_to_json(P()) == []


def test_tuple_to_json_three_factors():
    t = ValidTuple(P(2, 1), (P(1), P(1), P(1)), 2)
    payload = tuple_to_json(t)
    assert payload == {
        "lambda": [2, 1],
        "factors": [[1], [1], [1]],
        "mu": [1],
        "nu": [1],
        "zeta": [1],
        "coefficient": 2,
    }
    assert validate_payload(payload, TUPLE_SCHEMA) == []
    restored = tuple_from_json(payload)
    assert restored == t and restored.coefficient == 2


def test_tuple_to_json_two_factors_has_no_zeta():
    payload = tuple_to_json(ValidTuple(P(2), (P(1), P(1)), 1))
    assert "zeta" not in payload
    assert payload["factors"] == [[1], [1]]


def test_solution_payload_validates():
    solution = solve_search(QmcInstance(3, (2, 2, 1)))
    payload = solution_to_json(solution, seed=42)
    assert validate_payload(payload, OUTPUT_SCHEMAS["solve"]) == []
    assert payload["value"] == 24
    restored = solution_from_json(payload)
    assert restored.value == 24
    assert restored.argmax == solution.argmax


def test_validate_payload_reports_problems():
    schema = OUTPUT_SCHEMAS["solve"]
    payload = {"d": 2, "parts": [1, 1, 1], "method": "search", "value": True,
               "argmax": [{"lambda": [2, 1], "coefficient": 1}]}
    problems = validate_payload(payload, schema)
    assert "$.value: expected int, got bool" in problems
    assert "$.seed: missing" in problems
    assert "$.argmax[0].factors: missing" in problems


def test_validate_payload_float_accepts_int():
    payload = {"d": 2, "n": 3, "edges": 3, "method": "power", "value": 6,
               "iterations": 3, "residual": 0.0, "seed": 42}
    assert validate_payload(payload, OUTPUT_SCHEMAS["brute"]) == []
    assert validate_payload([], OUTPUT_SCHEMAS["brute"]) == ["$: expected object, got list"]


def test_format_spectrum():
    assert format_spectrum([4.0, 0.0, 0.0]) == "0\n0\n4\n"
    assert format_spectrum([0.1]) == "0.10000000000000001\n"


def test_tsv_keeps_integers_and_blanks():
    frame = rows_to_frame([{"a": 1, "b": None}, {"a": 2, "b": 6.5}], columns=["a", "b"])
    assert frame_to_tsv(frame) == "a\tb\n1\t\n2\t6.5\n"


def test_export_table_writes_file(tmp_path):
    frame = rows_to_frame([{"p": 1, "q": 1, "r": 1, "value": 12}])
    path = export_table(frame, "qmc_test", folder=str(tmp_path))
    assert path is not None
    assert os.path.exists(path)
    assert os.path.splitext(path)[1] in (".xlsx", ".csv")


def test_log_run_status_appends(tmp_path, monkeypatch):
    monkeypatch.setattr(data_io, "LOG_ENABLED", True)
    assert log_run_status("solve", "SUCCESS", {"d": 3, "parts": "2,2,1"}, 0.25, folder=str(tmp_path))
    assert log_run_status("brute", "FAILED", {}, 0.5, ["too big"], folder=str(tmp_path))
    files = list(tmp_path.iterdir())
    assert len(files) == 1
    text = files[0].read_text(encoding="utf-8")
    assert "COMMAND: solve" in text
    assert "Parameters: d=3, parts=2,2,1" in text
    assert "Errors: 1 (too big)" in text


def test_log_disabled(tmp_path):
    assert log_run_status("solve", "SUCCESS", {}, 0.0, folder=str(tmp_path)) is False
    assert not list(tmp_path.iterdir())


@pytest.mark.parametrize("command", sorted(OUTPUT_SCHEMAS))
def test_every_schema_requires_seed(command):
    assert OUTPUT_SCHEMAS[command]["seed"] is int
