import json
import subprocess
import sys

import pytest

from octogroup.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_chartab_json_7_3(capsys):
    code, out, _ = run_cli(capsys, "chartab", "7:3", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["order"] == 21
    assert len(doc["classes"]) == 5
    assert len(doc["irreps"]) == 5
    assert sorted(i["degree"] for i in doc["irreps"]) == [1, 1, 1, 3, 3]
    assert [i["label"] for i in doc["irreps"]] == ["1", "1_1", "1_2", "3_1", "3_2"]


def test_chartab_json_1344(capsys):
    code, out, _ = run_cli(capsys, "chartab", "2^3.PSL2(7)", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["classes"]) == 11
    assert sum(c["size"] for c in doc["classes"]) == 1344
    eights = [c for c in doc["classes"] if c["order"] == 8]
    assert sum(c["size"] for c in eights) == 336


def test_chartab_unknown_group(capsys):
    code, _, err = run_cli(capsys, "chartab", "nope")
    assert code == 2
    assert "unknown group" in err


def test_chartab_text(capsys):
    code, out, _ = run_cli(capsys, "chartab", "PSL2(7)")
    assert code == 0
    assert "order 168" in out
    assert "3_1" in out


def test_tensor_examples(capsys):
    code, out, _ = run_cli(capsys, "tensor", "2^3:7:3", "3_1", "3_2")
    assert code == 0
    assert out.strip() == "3_1 x 3_2 = 1 + 1_1 + 1_2 + 3_1 + 3_2"
    code, out, _ = run_cli(capsys, "tensor", "7:3", "1", "3_1")
    assert code == 0
    assert out.strip() == "1 x 3_1 = 3_1"
    # the printed source value for 8 x 8 omits a 7_2 (flagged misprint);
    # the computed decomposition is reported
    code, out, _ = run_cli(capsys, "tensor", "2^3.PSL2(7)", "8", "8")
    assert code == 0
    assert out.strip() == "8 x 8 = 1 + 3_1 + 3_2 + 2(6) + 3(7_2) + 3(8)"


def test_tensor_unknown_label(capsys):
    code, _, err = run_cli(capsys, "tensor", "7:3", "9_9", "1")
    assert code == 2
    assert "unknown irrep label" in err


def test_branch_examples(capsys):
    code, out, _ = run_cli(capsys, "branch", "2^3.PSL2(7)", "2^3:7:3")
    assert code == 0
    assert "21_1 -> 7_1 + 7_2 + 7_3" in out
    code, out, _ = run_cli(capsys, "branch", "PSL2(7)", "7:3")
    assert code == 0
    assert "6 -> 3_1 + 3_2" in out
    code, out, _ = run_cli(capsys, "branch", "2^3:PSL2(7)", "PSL2(7)")
    assert code == 0
    assert "7_3 -> 1 + 6" in out


def test_branch_non_subgroup_pair(capsys):
    code, _, err = run_cli(capsys, "branch", "7:3", "PSL2(7)")
    assert code == 2
    assert "no registered subgroup embedding" in err


def test_verify_filter(capsys):
    code, out, _ = run_cli(capsys, "verify", "--filter", "orders.")
    assert code == 0
    assert "PASS orders.7:3" in out
    assert "FAIL" not in out


def test_verify_full_exit_zero(capsys, report):
    code, out, _ = run_cli(capsys, "verify")
    assert code == 0
    assert "0 fail" in out
    assert "FLAG misprint.A" in out


def test_verify_json(capsys):
    code, out, _ = run_cli(capsys, "verify", "--format", "json", "--filter", "orders.")
    assert code == 0
    data = json.loads(out)
    assert all(c["status"] == "pass" for c in data)


def test_verify_corrupt_golden_dir(capsys, tmp_path):
    (tmp_path / "chartab_7_3.txt").write_text("group 7:3\norder 21\nsizes 9 9\n")
    from octogroup import catalog
    catalog.verify_all.cache_clear()
    try:
        code, out, _ = run_cli(capsys, "verify", "--golden-dir", str(tmp_path),
                               "--filter", "chartab.7:3")
        assert code == 1
        assert "FAIL" in out
        assert "chartab_7_3.txt" in out
    finally:
        catalog.verify_all.cache_clear()


def test_octmul(capsys):
    code, out, _ = run_cli(capsys, "octmul", "e1", "e2")
    assert code == 0
    assert out.strip() == "(e1) * (e2) = e3"
    code, out, _ = run_cli(capsys, "octmul", "1/2*e2+e7", "e1")
    assert code == 0
    assert out.strip() == "(1/2*e2 + e7) * (e1) = -1/2*e3 + e4"
    code, _, err = run_cli(capsys, "octmul", "e9", "e1")
    assert code == 2


def test_json_output_byte_identical_across_processes():
    cmd = [sys.executable, "-m", "octogroup", "chartab", "7:3", "--format", "json"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second
