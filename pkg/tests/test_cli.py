import csv
import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from permotzkin import verify
from permotzkin.cli import main

SRC = str(Path(__file__).resolve().parent.parent / "src")


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_stats_text(capsys):
    code, out, _ = run(capsys, "stats", "3 2 1")
    assert code == 0
    assert out.strip() == "inv=3  fix=1  exc=1  depth=2"


def test_stats_json_and_csv_agree(capsys):
    code, out_json, _ = run(capsys, "stats", "3 2 1", "--format", "json")
    assert code == 0
    code, out_csv, _ = run(capsys, "stats", "3 2 1", "--format", "csv")
    assert code == 0
    [json_row] = json.loads(out_json)
    [csv_row] = list(csv.DictReader(io.StringIO(out_csv)))
    assert {k: str(v) for k, v in json_row.items()} == csv_row


def test_stats_identity(capsys):
    code, out, _ = run(capsys, "stats", "1 2 3")
    assert code == 0
    assert out.strip() == "inv=0  fix=3  exc=0  depth=0"


def test_stats_parse_error_exit_code(capsys):
    code, out, err = run(capsys, "stats", "2 2 1")
    assert code == 2
    assert out == ""
    assert "position 2: value 2 repeated" in err


def test_encode_decode_round_trip(capsys):
    code, out, _ = run(capsys, "encode", "2 1")
    assert code == 0
    assert out.strip() == "U(1,0) D(1,0)"
    code, out, _ = run(capsys, "decode", "U(1,0) D(1,0)")
    assert code == 0
    assert out.strip() == "2 1"


def test_encode_empty_permutation(capsys):
    code, out, _ = run(capsys, "encode", "")
    assert code == 0
    assert out.strip() == ""


def test_decode_json_records(capsys):
    code, out, _ = run(capsys, "encode", "3 2 1", "--format", "json")
    assert code == 0
    code, decoded, _ = run(capsys, "decode", out)
    assert code == 0
    assert decoded.strip() == "3 2 1"


def test_decode_rejects_invalid_path(capsys):
    code, _, err = run(capsys, "decode", "U(1,0)")
    assert code == 2
    assert "height" in err


@pytest.mark.parametrize("perm", ["", "1", "2 1", "3 1 2", "2 4 1 3", "5 3 1 2 4"])
def test_cli_round_trip_corpus(capsys, perm):
    code, path_text, _ = run(capsys, "encode", perm)
    assert code == 0
    code, decoded, _ = run(capsys, "decode", path_text.strip())
    assert code == 0
    assert decoded.strip() == perm


def test_expand_json(capsys):
    code, out, _ = run(capsys, "expand", "--preset", "refined", "--order", "3", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert rows[0] == {"n": 0, "coefficient": "1"}
    assert rows[1] == {"n": 1, "coefficient": "p"}
    assert len(rows) == 4


def test_expand_guard_exit_code(capsys):
    code, _, err = run(capsys, "expand", "--preset", "depth", "--order", "40")
    assert code == 2
    assert "limited" in err


def test_imbalance(capsys):
    code, out, _ = run(capsys, "imbalance", "--stat", "depth", "--n", "5")
    assert code == 0
    assert out.strip() == "16"
    code, out, _ = run(capsys, "imbalance", "--stat", "exc", "--n", "3", "--format", "json")
    assert code == 0
    assert json.loads(out) == [{"stat": "exc", "n": 3, "value": -2}]


def test_involution_command(capsys):
    code, out, _ = run(capsys, "involution", "--perm", "1 2", "--format", "json")
    assert code == 0
    [row] = json.loads(out)
    assert row == {"partner": "2 1", "delta": 1, "fixed": False}


def test_verify_passes_and_is_deterministic(capsys):
    code, first, _ = run(capsys, "verify", "--max-n", "4", "--format", "json")
    assert code == 0
    code, second, _ = run(capsys, "verify", "--max-n", "4", "--format", "json")
    assert code == 0
    assert first == second
    records = json.loads(first)
    assert all(record["status"] == "pass" for record in records)
    assert "elapsed_ms" not in records[0]
    keys = [(record["check"], record["n"]) for record in records]
    assert keys == sorted(keys)


def test_verify_report_schema(capsys):
    code, out, _ = run(
        capsys, "verify", "--max-n", "3", "--check", "signed-gf", "--format", "json", "--timings"
    )
    assert code == 0
    records = json.loads(out)
    assert {record["check"] for record in records} == {"signed-gf"}
    assert set(records[0]) == {"check", "n", "expected", "computed", "status", "elapsed_ms"}


def test_verify_csv_matches_json(capsys):
    code, out_json, _ = run(capsys, "verify", "--max-n", "3", "--check", "cardinality", "--format", "json")
    assert code == 0
    code, out_csv, _ = run(capsys, "verify", "--max-n", "3", "--check", "cardinality", "--format", "csv")
    assert code == 0
    json_rows = json.loads(out_json)
    csv_rows = list(csv.DictReader(io.StringIO(out_csv)))
    assert [{k: str(v) for k, v in row.items()} for row in json_rows] == csv_rows


def test_verify_exit_code_on_failure(capsys, monkeypatch):
    def failing_check(max_n):
        del max_n
        return [
            verify.ReportRecord(
                check="broken", n=1, expected="x", computed="y", status="fail", elapsed_ms=0.0
            )
        ]

    monkeypatch.setitem(verify.CHECKS, "broken", failing_check)
    code, out, _ = run(capsys, "verify", "--check", "broken")
    assert code == 1
    assert "[FAIL] broken n=1" in out


def test_verify_guard(capsys):
    code, _, err = run(capsys, "verify", "--max-n", "10")
    assert code == 2
    assert "limited" in err


def test_usage_error_exit_code(capsys):
    assert main(["bogus-command"]) == 2
    capsys.readouterr()


def test_console_entry_point_runs_in_subprocess():
    result = subprocess.run(
        [sys.executable, "-m", "permotzkin.cli", "stats", "2 1"],
        capture_output=True,
        text=True,
        env={"PYTHONPATH": SRC, "PATH": "/usr/bin:/bin"},
    )
    assert result.returncode == 0
    assert result.stdout.strip() == "inv=1  fix=0  exc=1  depth=1"
