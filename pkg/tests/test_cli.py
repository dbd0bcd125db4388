import io
import sys

import pytest

from qborel.cli import main


def run_cli(argv):
    buf = io.StringIO()
    old = sys.stdout
    sys.stdout = buf
    try:
        code = main(argv)
    finally:
        sys.stdout = old
    return code, buf.getvalue()


def test_relations_pass():
    code, out = run_cli(["relations", "--family", "A", "--n", "2", "--r", "1",
                         "--height", "3"])
    assert code == 0
    lines = [l for l in out.splitlines() if l.startswith("CHECK")]
    assert lines and all(" PASS" in l for l in lines)


def test_relations_quartic_A1():
    code, out = run_cli(["relations", "--family", "A", "--n", "1", "--r", "1",
                         "--height", "6"])
    assert code == 0
    assert any("serre-0-1" in l and " PASS" in l for l in out.splitlines())


def test_lweight_pos_and_neg():
    code, out = run_cli(["lweight", "--family", "A", "--n", "3", "--r", "2",
                         "--K", "4", "--format", "text"])
    assert code == 0
    assert "-q^-5*a + q^-3*a" in out
    code, out = run_cli(["lweight", "--family", "D", "--n", "4", "--r", "4",
                         "--model", "neg", "--K", "4", "--format", "text"])
    assert code == 0
    assert "[geometric]" in out and "CHECK lweight-neg-D4r4-K4 PASS" in out


def test_character_command():
    code, out = run_cli(["character", "--family", "A", "--n", "4", "--r", "2",
                         "--height", "8"])
    assert code == 0
    assert "CHECK character-A4r2-h8 PASS" in out


def test_braid_command():
    code, out = run_cli(["braid", "--family", "D", "--n", "5", "--r", "5"])
    assert code == 0
    assert "readings-equivalent PASS" in out


def test_rank1_and_recurrence():
    code, out = run_cli(["rank1"])
    assert code == 0
    code, out = run_cli(["recurrence", "--family", "D", "--n", "6", "--r", "6",
                         "--model", "neg", "--K", "10"])
    assert code == 0
    assert "closed-form residuals all 0" in out


def test_invalid_type_is_failure_exit():
    code, out = run_cli(["braid", "--family", "D", "--n", "5", "--r", "2"])
    assert code == 1
    assert "FAIL" in out


def test_reports_are_deterministic():
    args = ["relations", "--family", "A", "--n", "3", "--r", "2",
            "--height", "4", "--seed", "7"]
    _, out1 = run_cli(args)
    _, out2 = run_cli(args)
    assert out1 == out2


def test_output_file(tmp_path):
    path = tmp_path / "report.txt"
    code, out = run_cli(["braid", "--family", "A", "--n", "4", "--r", "2",
                         "--output", str(path)])
    assert code == 0
    assert out == ""
    assert "PASS" in path.read_text()
