import io
import json
import subprocess
import sys

import pytest

from cleanring.cli import (
    CSV_COLUMNS,
    EXIT_DISAGREE,
    EXIT_OK,
    EXIT_USAGE,
    UsageError,
    admissible_triples,
    build_parser,
    csv_to_rows,
    main,
    parse_int_set,
    rows_to_csv,
)


def run(*argv):
    buf = io.StringIO()
    rc = main(list(argv), out=buf)
    return rc, buf.getvalue()


def test_parse_int_set():
    assert parse_int_set("1..4,7") == [1, 2, 3, 4, 7]
    assert parse_int_set("-3..-1, 2") == [-3, -2, -1, 2]
    assert parse_int_set("5,5,3") == [3, 5]
    assert parse_int_set("") == []
    for bad in ("a", "3..1", "1...2"):
        with pytest.raises(UsageError):
            parse_int_set(bad)


def test_classify_examples():
    rc, text = run("classify", "--base", "rational", "--p", "3", "--group", "11", "--format", "json")
    rep = json.loads(text)
    assert rc == EXIT_OK
    assert rep["verdict"] == "WeaklyCleanNotClean" and rep["matched_case"] == "thm1.3b"

    rc, text = run("classify", "--base", "quadratic", "--d", "5", "--p", "19", "--group", "5",
                   "--method", "both", "--format", "json")
    data = json.loads(text)
    assert rc == EXIT_OK
    assert data["agreement"]["status"] == "agree"
    assert data["agreement"]["theorem_verdict"] == "Clean"

    rc, text = run("classify", "--base", "rational", "--p", "3", "--group", "6")
    assert rc == EXIT_USAGE and text == ""


def test_classify_text_output_echoes_normalized_group():
    rc, text = run("classify", "--p", "5", "--group", "4,6")
    assert rc == EXIT_OK
    assert "C2+C12" in text


def test_classify_usage_errors():
    assert run("classify", "--p", "4", "--group", "3")[0] == EXIT_USAGE
    assert run("classify", "--base", "quadratic", "--p", "5", "--group", "3")[0] == EXIT_USAGE
    assert run("classify", "--base", "cyclotomic", "--m", "6", "--p", "3", "--group", "5")[0] == EXIT_USAGE
    assert run("classify", "--p", "5", "--group", "x")[0] == EXIT_USAGE


def test_strict_exit_on_unledgered(tmp_path):
    empty = tmp_path / "empty.json"
    empty.write_text('{"version": 1, "entries": []}')
    args = ["classify", "--base", "quadratic", "--d", "-1", "--p", "5", "--group", "4", "--method", "both"]
    assert run(*args, "--strict")[0] == EXIT_OK
    assert run(*args, "--strict", "--ledger", str(empty))[0] == EXIT_DISAGREE
    assert run("--ledger", str(empty), *args, "--strict")[0] == EXIT_DISAGREE
    assert run(*args, "--ledger", str(empty))[0] == EXIT_OK


def test_ledger_env_var(tmp_path, monkeypatch):
    empty = tmp_path / "empty.json"
    empty.write_text('{"version": 1, "entries": []}')
    monkeypatch.setenv("CLEANRING_LEDGER", str(empty))
    rc, _ = run("classify", "--base", "quadratic", "--d", "-1", "--p", "5", "--group", "4",
                "--method", "both", "--strict")
    assert rc == EXIT_DISAGREE


def test_survey_rational_rows():
    rc, text = run("survey", "--p", "3", "--n", "1..10", "--format", "json")
    rows = json.loads(text)
    assert rc == EXIT_OK
    assert [r["group"] for r in rows] == ["1", "2", "4", "5", "7", "8", "10"]


def test_survey_ledgered_row():
    rc, text = run("survey", "--base", "quadratic", "--d", "-1", "--p", "5", "--groups", "4", "--format", "csv")
    rows = csv_to_rows(text)
    assert rc == EXIT_OK and len(rows) == 1
    assert rows[0]["agree"] == "ledgered" and rows[0]["verdict"] == "Clean"


@pytest.mark.parametrize("argv", [
    ["survey", "--p", "3..20", "--n", "1..24", "--square"],
    ["survey", "--base", "cyclotomic", "--m", "1..8", "--p", "3..13", "--n", "1..12"],
    ["survey", "--base", "quadratic", "--d=-10..10", "--p", "3..13", "--groups", "4;2,6;5;8"],
])
def test_survey_counts_and_round_trip(argv):
    args = build_parser().parse_args(argv)
    expected = len(admissible_triples(args))
    rc, csv_text = run(*argv, "--format", "csv")
    rows = csv_to_rows(csv_text)
    assert rc == EXIT_OK and len(rows) == expected
    assert list(rows[0]) == CSV_COLUMNS
    assert rows_to_csv(rows) == csv_text

    rc, json_text = run(*argv, "--format", "json")
    jrows = json.loads(json_text)
    assert len(jrows) == expected
    assert [{k: r[k] for k in CSV_COLUMNS} for r in jrows] == rows
    assert json.dumps(jrows, indent=2, sort_keys=True) + "\n" == json_text

    rc, table = run(*argv)
    assert rc == EXIT_OK and len(table.strip().splitlines()) >= expected


def test_survey_is_byte_stable_and_jobs_deterministic():
    argv = ["survey", "--base", "quadratic", "--d=-6..6", "--p", "3..23", "--n", "1..16", "--format", "csv"]
    one = run(*argv)[1]
    assert run(*argv)[1] == one
    assert run(*argv, "--jobs", "3")[1] == one


def test_survey_empty_range():
    assert run("survey", "--p", "4", "--n", "1..3")[0] == EXIT_USAGE
    assert run("survey", "--p", "3", "--n", "3,6")[0] == EXIT_USAGE


def test_verify_small_sweeps():
    assert run("verify", "oracle", "--d-max", "20", "--p-max", "13")[0] == EXIT_OK
    assert run("verify", "prop26", "--n-max", "60", "--p-max", "30")[0] == EXIT_OK
    assert run("verify", "prop32", "--n-max", "300", "--p-max", "100", "--corrected")[0] == EXIT_OK
    rc, text = run("verify", "prop32", "--n-max", "300", "--p-max", "100")
    assert rc != EXIT_OK and "4g" in text
    rc, text = run("verify", "theorems", "--base", "quadratic", "--d-max", "5", "--p-max", "13", "--exp-max", "12")
    assert rc == EXIT_OK


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "cleanring", "classify", "--p", "3", "--group", "11"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and "WeaklyCleanNotClean" in proc.stdout
