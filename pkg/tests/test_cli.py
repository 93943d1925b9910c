"""Exit codes, output schema and determinism of the command line."""

import contextlib
import io
import json
import subprocess
import sys

import pytest

from finring import build_expr, resolve_element
from finring.cli import main


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            code = main(argv)
    except SystemExit as ex:          # argparse usage errors
        code = ex.code
    return code, out.getvalue(), err.getvalue()


def test_check_holds_exits_zero():
    code, out, _ = run(["check", "Z(6)", "right_e_reversible", "--e", "3"])
    assert code == 0
    assert "right_e_reversible relative to 3: ok" in out


def test_check_fails_is_informational_not_an_error():
    code, out, _ = run(["check", "U(2,Z(2))", "reversible"])
    assert code == 0
    assert "FAIL" in out
    assert "witness" in out


def test_check_skipped_exits_three():
    code, out, _ = run(["check", "Z(6)", "right_e_reversible", "--e", "3",
                        "--max-pair-order", "4"])
    assert code == 3
    assert "skip" in out


def test_build_guard_exits_three():
    code, _, err = run(["check", "M(3,Z(3))", "reversible"])
    assert code == 3
    assert "guard" in err


def test_parse_error_exits_two_with_position():
    code, _, err = run(["check", "Z(", "reversible"])
    assert code == 2
    assert "1:3" in err


def test_unknown_property_exits_two():
    code, _, err = run(["check", "Z(6)", "frobnitz"])
    assert code == 2
    assert "unknown property" in err


def test_non_idempotent_e_exits_two():
    code, _, err = run(["check", "Z(6)", "right_e_reversible", "--e", "2"])
    assert code == 2
    assert "not idempotent" in err


def test_check_json_schema_and_witness_labels():
    code, out, _ = run(["check", "U(2,Z(3))", "right_e_reversible",
                        "--e", "[[0,0],[0,1]]", "--format", "json"])
    assert code == 0
    data = json.loads(out)
    assert data["schema"] == "finring/1"
    assert data["ring"] == "U(2,Z(3))"
    assert data["command"][0] == "check"
    assert data["timings"] is None
    verdict = data["results"][1]
    assert verdict["status"] == "fails"
    # labels must resolve back to the witness indices
    R = build_expr("U(2,Z(3))")
    back = [resolve_element(R, lbl) for lbl in verdict["witness_labels"]]
    assert back == verdict["witness"]


def test_json_round_trips_byte_identically():
    _, out, _ = run(["describe", "Z(12)", "--format", "json"])
    data = json.loads(out)
    assert json.dumps(data, indent=2) + "\n" == out


def test_survey_table_and_row_count():
    code, out, _ = run(["survey", "U(2,Z(2))"])
    assert code == 0
    assert "cells: + holds, - fails, ? guard-skipped" in out
    code, out, _ = run(["survey", "U(2,Z(2))", "--format", "json"])
    data = json.loads(out)
    kinds = [r["kind"] for r in data["results"]]
    assert kinds == ["axioms", "global", "matrix"]
    assert len(data["results"][1]["verdicts"]) == 12
    rows = data["results"][2]["rows"]
    assert len(rows) == 6
    zero_row = rows[0]
    assert zero_row["idempotent"] == "[[0,0],[0,0]]"
    assert all(v == "holds" for v in zero_row["verdicts"].values())


def test_survey_oversized_ring_marks_pair_skips():
    code, out, _ = run(["survey", "Z(6)", "--max-pair-order", "4",
                        "--format", "json"])
    assert code == 0
    rows = json.loads(out)["results"][2]["rows"]
    nonzero = [r for r in rows if r["idempotent"] != "0"]
    assert nonzero
    for row in nonzero:
        # pair sweeps hit the lowered guard, triple sweeps still run
        assert row["verdicts"]["right_e_reversible"] == "skipped"
        assert row["verdicts"]["e_symmetric"] == "holds"


def test_describe_lists_structure():
    code, out, _ = run(["describe", "Z(4)", "--format", "json"])
    assert code == 0
    summary = json.loads(out)["results"][1]
    assert summary["kind"] == "summary"
    assert summary["order"] == 4
    assert (summary["zero"], summary["one"]) == ("0", "1")
    assert [i["label"] for i in summary["idempotents"]] == ["0", "1"]
    assert summary["nilpotents"] == ["0", "2"]
    assert summary["center_size"] == 4


def test_laws_run_on_a_tiny_corpus(tmp_path):
    path = tmp_path / "c.txt"
    path.write_text("Z(4)\nU(2,Z(2))\n")
    code, out, _ = run(["laws", "--corpus", str(path)])
    assert code == 0
    assert "VIOLATED" not in out
    code, a, _ = run(["laws", "--corpus", str(path), "--law", "ere",
                      "--format", "json"])
    code2, b, _ = run(["laws", "--corpus", str(path), "--law", "ere",
                       "--format", "json"])
    assert code == code2 == 0
    assert a == b
    data = json.loads(a)
    assert [r["law"] for r in data["results"]] == ["ere"]


def test_laws_missing_corpus_exits_two(tmp_path):
    code, _, err = run(["laws", "--corpus", str(tmp_path / "nope.txt")])
    assert code == 2


def test_laws_unknown_law_exits_two():
    code, _, err = run(["laws", "--law", "frobnitz"])
    assert code == 2
    assert "unknown law" in err


def test_laws_violation_exit_code(tmp_path, monkeypatch):
    # no shipped corpus violates a law, so fake one verdict to pin the
    # exit-code contract
    import finring.cli as cli_mod
    real = cli_mod.run_laws

    def doctored(*a, **k):
        reports = real(*a, **k)
        reports[0].cases[0].status = "violated"
        return reports

    monkeypatch.setattr(cli_mod, "run_laws", doctored)
    path = tmp_path / "c.txt"
    path.write_text("Z(4)\n")
    code, out, _ = run(["laws", "--corpus", str(path), "--law", "ere"])
    assert code == 1
    assert "VIOLATED" in out


def test_usage_error_exits_two():
    code, _, err = run(["check"])
    assert code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "finring", "describe", "Z(6)"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert "Z(6)" in proc.stdout


def test_cache_flag_round_trip(tmp_path):
    argv = ["check", "M(2,Z(3))", "reversible", "--cache", str(tmp_path),
            "--format", "json"]
    code, first, _ = run(argv)
    assert code == 0
    assert list(tmp_path.iterdir())
    code, second, _ = run(argv)
    assert first == second
