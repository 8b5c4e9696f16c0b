import json
import subprocess
import sys

import pytest

from prefseq.cli import main

GOLD_O4 = "0000210212101020211022100201012120200220222122112111011001000120122011200111222000"
GOLD_COMPACT = "00022212202112102012001110100"


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestGenerate:
    def test_plain_golden(self, capsys):
        code, out, _ = run_cli(
            capsys, "generate", "--kind", "opposite", "--q", "3", "--d", "2", "--n", "4"
        )
        assert code == 0
        assert out == GOLD_O4 + "\n"

    def test_json_fields(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "generate", "--kind", "same", "--q", "2", "--d", "1", "--n", "3", "--format", "json",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["schema"] == 1
        assert doc["kind"] == "same"
        assert doc["initial"] == "010"
        assert doc["length"] == 10
        assert doc["visited_count"] == 8

    def test_higher(self, capsys):
        code, out, _ = run_cli(capsys, "generate", "--kind", "higher", "--q", "3", "--n", "3")
        assert code == 0 and out.strip() == GOLD_COMPACT

    def test_deterministic(self, capsys):
        argv = ["generate", "--kind", "opposite", "--q", "4", "--d", "3", "--n", "3"]
        _, first, _ = run_cli(capsys, *argv)
        _, second, _ = run_cli(capsys, *argv)
        assert first == second

    def test_init_infers_n(self, capsys):
        code, out, _ = run_cli(capsys, "generate", "--kind", "higher", "--q", "2", "--init", "00")
        assert code == 0 and out.strip() == "00110"

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "seq.txt"
        code, out, _ = run_cli(
            capsys, "generate", "--kind", "opposite", "--q", "3", "--d", "2", "--n", "4",
            "--out", str(target),
        )
        assert code == 0 and out == ""
        assert target.read_text() == GOLD_O4 + "\n"

    def test_not_coprime_is_validation_error(self, capsys):
        code, _, err = run_cli(capsys, "generate", "--kind", "opposite", "--q", "4", "--d", "2", "--n", "3")
        assert code == 1
        assert "coprime" in err

    def test_memory_cap(self, capsys):
        code, _, err = run_cli(capsys, "generate", "--kind", "higher", "--q", "2", "--n", "31")
        assert code == 1
        assert "cap" in err

    def test_missing_n(self, capsys):
        code, _, err = run_cli(capsys, "generate", "--kind", "higher", "--q", "2")
        assert code == 1


class TestVerify:
    @pytest.mark.parametrize(
        "argv",
        [
            ["verify", "--kind", "opposite", "--q", "3", "--d", "2", "--n", "4"],
            ["verify", "--kind", "opposite", "--q", "5", "--d", "3", "--n", "3"],
            ["verify", "--kind", "same", "--q", "4", "--d", "3", "--n", "3"],
            ["verify", "--kind", "higher", "--q", "5", "--n", "3"],
        ],
    )
    def test_families_pass(self, capsys, argv):
        code, out, _ = run_cli(capsys, *argv)
        assert code == 0
        assert "status=ok" in out

    def test_json_report(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--kind", "opposite", "--q", "3", "--d", "2", "--n", "4",
            "--format", "json",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["ok"] is True
        assert doc["missing"] == ["1111", "2222"]
        assert doc["terminal_ok"] is True

    def test_off_family_seed_fails(self, capsys):
        # an opposite-kind run seeded away from the zero word loses the
        # terminal/missing guarantees and must exit 2
        code, out, _ = run_cli(
            capsys, "verify", "--kind", "opposite", "--q", "2", "--d", "1", "--init", "01"
        )
        assert code == 2
        assert "status=violation" in out


class TestMap:
    def test_compact_golden(self, capsys):
        code, out, _ = run_cli(capsys, "map", "--q", "3", "--d", "2", "--n", "4", "--emit", "compact")
        assert code == 0
        assert out.strip() == GOLD_COMPACT

    def test_image_length(self, capsys):
        code, out, _ = run_cli(capsys, "map", "--q", "3", "--d", "2", "--n", "4", "--emit", "image")
        assert code == 0
        assert len(out.strip()) == 81

    def test_report(self, capsys):
        code, out, _ = run_cli(capsys, "map", "--q", "5", "--d", "2", "--n", "3", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["equal"] is True
        assert doc["first_mismatch"] is None

    def test_not_coprime(self, capsys):
        code, _, err = run_cli(capsys, "map", "--q", "4", "--d", "2", "--n", "3")
        assert code == 1


class TestAnalyze:
    def test_opposite_prediction(self, capsys):
        code, out, _ = run_cli(
            capsys, "analyze", "--kind", "opposite", "--q", "3", "--d", "2", "--n", "4"
        )
        assert code == 0
        assert "cycles=3" in out
        assert "q_prime=3" in out
        assert "predicted_missing=1111,2222" in out

    def test_same_complete(self, capsys):
        code, out, _ = run_cli(
            capsys, "analyze", "--kind", "same", "--q", "3", "--d", "1", "--n", "3", "--format", "json"
        )
        assert code == 0
        doc = json.loads(out)
        assert len(doc["cycles"]) == 1
        assert doc["complete"] is True
        assert doc["predicted_missing"] == []

    def test_cycles_only_without_n(self, capsys):
        code, out, _ = run_cli(capsys, "analyze", "--kind", "higher", "--q", "3")
        assert code == 0
        assert "cycles=1" in out
        assert "predicted_missing" not in out

    def test_other_column(self, capsys):
        code, out, _ = run_cli(capsys, "analyze", "--kind", "opposite", "--q", "5", "--d", "1", "--k", "2")
        assert code == 0
        assert "column=2" in out


class TestDiscrepancyCommand:
    def test_plain(self, capsys):
        code, out, _ = run_cli(
            capsys, "discrepancy", "--kind", "higher", "--q", "2", "--n", "8"
        )
        assert code == 0
        assert "value=28" in out

    def test_json(self, capsys):
        code, out, _ = run_cli(
            capsys, "discrepancy", "--kind", "same", "--q", "2", "--d", "1", "--n", "15",
            "--format", "json",
        )
        assert code == 0
        assert json.loads(out)["value"] == 50


class TestTable:
    def test_csv_header_and_rows(self, capsys):
        code, out, _ = run_cli(capsys, "table", "--q", "2", "--n-max", "6")
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "q,n,prefer_same,prefer_opposite,prefer_higher"
        assert lines[1] == "2,2,1,2,2"
        assert lines[-1] == "2,6,6,10,6"

    def test_dashes_above_cap(self, capsys):
        code, out, _ = run_cli(capsys, "table", "--q", "3", "--n-min", "13", "--n-max", "13")
        assert code == 0
        assert out.strip().split("\n")[1] == "3,13,-,-,-"

    def test_repeated_q(self, capsys):
        code, out, _ = run_cli(capsys, "table", "--q", "2", "--q", "3", "--n-min", "2", "--n-max", "2")
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[1].startswith("2,2,") and lines[2].startswith("3,2,")


class TestLargeAlphabet:
    def test_comma_separated_digits(self, capsys):
        code, out, _ = run_cli(capsys, "generate", "--kind", "higher", "--q", "11", "--n", "1")
        assert code == 0
        assert out.strip() == "0,10,9,8,7,6,5,4,3,2,1"

    def test_comma_separated_init(self, capsys):
        code, out, _ = run_cli(
            capsys, "generate", "--kind", "higher", "--q", "12", "--init", "0,0"
        )
        assert code == 0
        assert out.strip().startswith("0,0,11,")


class TestCustomMatrix:
    def test_generate_and_verify_with_matrix_file(self, capsys, tmp_path):
        path = tmp_path / "pref.txt"
        path.write_text("2 1\n0 1 0\n1 0 1\n")  # the opposite family written out
        code, out, _ = run_cli(
            capsys, "generate", "--kind", "custom", "--q", "2", "--n", "2",
            "--matrix-file", str(path),
        )
        assert code == 0
        assert out.strip() == "0010"
        code, out, _ = run_cli(
            capsys, "verify", "--kind", "custom", "--q", "2", "--n", "3",
            "--matrix-file", str(path),
        )
        assert code == 0

    def test_malformed_matrix(self, capsys, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("2 1\n0 1 1\n1 0 1\n")
        code, _, err = run_cli(
            capsys, "generate", "--kind", "custom", "--q", "2", "--n", "2",
            "--matrix-file", str(path),
        )
        assert code == 1
        assert "permutation" in err

    def test_custom_requires_matrix(self, capsys):
        code, _, err = run_cli(capsys, "generate", "--kind", "custom", "--q", "2", "--n", "2")
        assert code == 1
        assert "matrix" in err

    def test_alphabet_mismatch(self, capsys, tmp_path):
        path = tmp_path / "pref.txt"
        path.write_text("2 1\n0 1 0\n1 0 1\n")
        code, _, err = run_cli(
            capsys, "generate", "--kind", "custom", "--q", "3", "--n", "2",
            "--matrix-file", str(path),
        )
        assert code == 1


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "prefseq", "generate", "--kind", "higher", "--q", "2", "--n", "3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "0001110100"
