import csv
import json
import math
import subprocess
import sys

import pytest

from threshold_qw.cli import main, parse_time


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


class TestGraph:
    def test_word_0011011(self, capsys):
        data = run_json(capsys, "graph", "--word", "0011011")
        assert data["spectrum"] == [7, 7, 6, 6, 4, 2, 0]
        assert sorted(data["degrees"]) == [2, 4, 4, 5, 5, 6, 6]
        assert data["blocks"] == [2, 2, 1, 2]

    def test_k2_blocks(self, capsys):
        assert run_json(capsys, "graph", "--blocks", "1,1")["spectrum"] == [2, 0]

    def test_invalid_word(self, capsys):
        code, out, err = run(capsys, "graph", "--word", "012")
        assert code == 2 and "invalid character" in err and out == ""


def test_spectrum(capsys):
    data = run_json(capsys, "spectrum", "--blocks", "2,2")
    assert data["spectrum"] == [4, 4, 2, 0]


class TestPropagate:
    def test_transfer(self, capsys):
        data = run_json(capsys, "propagate", "--blocks", "2,2", "--t", "1.5707963267948966", "--from", "1")
        assert data["probabilities"][1] == pytest.approx(1, abs=1e-10)
        assert sum(data["probabilities"]) == pytest.approx(1, abs=1e-10)

    def test_zero_time(self, capsys):
        data = run_json(capsys, "propagate", "--blocks", "2,2", "--t", "0", "--from", "3")
        assert data["probabilities"][2] == pytest.approx(1, abs=1e-12)

    def test_partial_transfer(self, capsys):
        data = run_json(capsys, "propagate", "--blocks", "2,4", "--t", "1.5707963267948966", "--from", "1")
        assert data["probabilities"][1] == pytest.approx(4 / 9, abs=1e-10)

    def test_symbolic_time(self, capsys):
        data = run_json(capsys, "propagate", "--blocks", "2,2", "--t", "pi/2", "--from", "1")
        assert data["t"] == math.pi / 2

    def test_bad_vertex(self, capsys):
        code, _, err = run(capsys, "propagate", "--blocks", "2,2", "--t", "0", "--from", "9")
        assert code == 2 and "out of range" in err


@pytest.mark.parametrize("text, value", [
    ("pi/2", math.pi / 2), ("3pi/2", 3 * math.pi / 2), ("3*pi/2", 3 * math.pi / 2),
    ("pi", math.pi), ("0.25", 0.25), ("2 pi", 2 * math.pi),
])
def test_parse_time(text, value):
    assert parse_time(text) == value


def test_pst_check(capsys):
    data = run_json(capsys, "pst-check", "--blocks", "2,6,4,4")
    assert data["has_pst"] is True and data["pair"] == [1, 2]
    data = run_json(capsys, "pst-check", "--blocks", "2,4")
    assert data["violated_conditions"] == ["m2 mod 4 ≠ 2"]


class TestDetect:
    def test_edge(self, capsys):
        data = run_json(capsys, "detect-edge", "--n", "8", "--hidden", "3,7")
        assert data["success"] is True and data["evolutions_used"] == 3

    def test_matching(self, capsys):
        data = run_json(capsys, "detect-matching", "--n", "8", "--hidden", "1:2,3:4,5:6,7:8", "--perfect")
        assert data["evolutions_used"] == 3 and data["success"] is True

    def test_parity(self, capsys):
        code, _, err = run(capsys, "detect-edge", "--n", "6", "--hidden", "1,2")
        assert code == 2 and "4m" in err

    def test_perfect_flag_mismatch(self, capsys):
        code, _, _ = run(capsys, "detect-matching", "--n", "8", "--hidden", "1:2", "--perfect")
        assert code == 2


def test_node_bounds(capsys):
    data = run_json(capsys, "node-bounds", "--blocks", "2,6,4,4")
    assert [b["case"] for b in data["bounds"]] == ["i", "ii", "iii", "ii"]
    assert all(b["holds"] for b in data["bounds"])


def test_lemma_cos(capsys):
    data = run_json(capsys, "lemma-cos", "--a", "5")
    assert all(r["abs_error"] < 1e-4 for r in data["results"])
    code, _, _ = run(capsys, "lemma-cos", "--a", "4")
    assert code == 2


class TestSweep:
    def test_rows(self, capsys, tmp_path):
        out = tmp_path / "sweep.csv"
        code, _, err = run(capsys, "sweep", "--max-n", "8", "--out", str(out))
        assert code == 0 and "wrote" in err
        with open(out) as fh:
            rows = list(csv.DictReader(fh))
        assert list(rows[0]) == ["form", "n", "has_pst", "max_offdiag_modulus", "violations"]
        by_form = {r["form"]: r for r in rows}
        assert len(rows) == sum(2 ** (n - 2) for n in range(2, 9))
        assert by_form["2,2"]["has_pst"] == "True"
        assert float(by_form["2,2"]["max_offdiag_modulus"]) == pytest.approx(1.0, abs=1e-9)
        assert by_form["2,4"]["has_pst"] == "False"
        assert float(by_form["2,4"]["max_offdiag_modulus"]) == pytest.approx(0.6666667, abs=1e-7)

    def test_guard(self, capsys):
        code, _, err = run(capsys, "sweep", "--max-n", "99")
        assert code == 2 and "desk-scale guard" in err

    def test_unwritable(self, capsys, tmp_path):
        code, _, _ = run(capsys, "sweep", "--max-n", "4", "--out", str(tmp_path / "missing" / "x.csv"))
        assert code == 2


def test_usage_error_exit_status():
    proc = subprocess.run([sys.executable, "-m", "threshold_qw", "graph", "--bogus"],
                          capture_output=True, text=True)
    assert proc.returncode == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "threshold_qw", "graph", "--word", "0011"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["spectrum"] == [4, 4, 2, 0]
