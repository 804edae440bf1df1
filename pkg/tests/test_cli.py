"""Tests for the command-line front end."""
import json
import subprocess
import sys

import pytest

from swapnet.cli import main
from swapnet.network import build_cyclic_network, export_circuit

SEQ_D4 = "1,1,1,1,2,3,4,5,7,10,14,19,26,36,50,69,95,131,181,250,345,476,657,907,1252,1728"


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSeq:
    def test_exact_terms(self, capsys):
        code, out, _ = run_cli(capsys, "seq", "--d", "4", "--count", "26")
        assert code == 0
        assert out.strip() == SEQ_D4

    def test_modular_terms(self, capsys):
        code, out, _ = run_cli(capsys, "seq", "--d", "2", "--count", "7", "--mod", "2")
        assert code == 0
        assert out.strip() == "1,1,0,1,1,0,1"

    def test_json_terms_are_decimal_strings(self, capsys):
        code, out, _ = run_cli(capsys, "seq", "--d", "8", "--count", "26", "--json")
        doc = json.loads(out)
        assert code == 0
        assert doc["terms"][-1] == "78"
        assert all(isinstance(t, str) for t in doc["terms"])


class TestCycle:
    def test_d6_text(self, capsys):
        code, out, _ = run_cli(capsys, "cycle", "--d", "6")
        assert code == 0
        assert "length 6552" in out
        assert "63 (mod 2), 728 (mod 3)" in out

    def test_d6_json_schema(self, capsys):
        code, out, _ = run_cli(capsys, "cycle", "--d", "6", "--json")
        assert json.loads(out) == {
            "d": 6,
            "length": 6552,
            "factors": [{"pm": 2, "len": 63}, {"pm": 3, "len": 728}],
            "shift": 0,
            "permutation": [0, 1, 2, 3, 4, 5],
            "method": "composed",
        }

    def test_budget_exhaustion_exit_3(self, capsys):
        code, out, _ = run_cli(capsys, "cycle", "--d", "7", "--budget", "5")
        assert code == 3
        assert "inconclusive" in out

    def test_budget_exhaustion_json(self, capsys):
        code, out, _ = run_cli(capsys, "cycle", "--d", "7", "--budget", "5", "--json")
        assert code == 3
        doc = json.loads(out)
        assert doc["inconclusive"] is True and doc["steps"] == 5


class TestScan:
    def test_table(self, capsys):
        code, out, _ = run_cli(capsys, "scan", "--max", "9", "--json")
        lengths = [e["length"] for e in json.loads(out)]
        assert code == 0
        assert lengths == [3, 8, 30, 24, 6552, 48, 252, 240]

    def test_csv(self, capsys):
        code, out, _ = run_cli(capsys, "scan", "--max", "4", "--csv")
        assert code == 0
        assert out == "d,length\n2,3\n3,8\n4,30\n"

    def test_jobs_flag(self, capsys):
        code, out, _ = run_cli(capsys, "scan", "--max", "6", "--jobs", "3", "--json")
        assert code == 0
        assert [e["length"] for e in json.loads(out)] == [3, 8, 30, 24, 6552]

    def test_partial_failure_exit_3(self, capsys):
        code, out, _ = run_cli(capsys, "scan", "--max", "6", "--budget", "10")
        assert code == 3
        assert "inconclusive" in out
        assert "d=2" in out  # the feasible entries are still reported


class TestSwap:
    def test_d3_text(self, capsys):
        code, out, _ = run_cli(capsys, "swap", "--d", "3")
        assert code == 0
        assert out.strip() == "SWAP: cyclic shift by -1, 8 gates"

    def test_d6_identity(self, capsys):
        code, out, _ = run_cli(capsys, "swap", "--d", "6")
        assert out.strip() == "IDENTITY: shift 0, 6552 gates"

    def test_d8_json(self, capsys):
        code, out, _ = run_cli(capsys, "swap", "--d", "8", "--json")
        doc = json.loads(out)
        assert doc["kind"] == "grouped" and doc["shift"] == 4 and doc["gates"] == 252


class TestTrace:
    def test_rows(self, capsys):
        code, out, _ = run_cli(capsys, "trace", "--d", "4", "--steps", "26")
        lines = out.splitlines()
        assert lines[0] == "d=4 t=-3..26"
        assert lines[1] == "row0: 0 0 0 1 1 1 1 2 3 0 1 3 2 2 3 2 0 2 1 3 3 1 2 1 0 1 3 0 0 1"

    def test_json(self, capsys):
        code, out, _ = run_cli(capsys, "trace", "--d", "3", "--steps", "5", "--json")
        doc = json.loads(out)
        assert doc["t_start"] == -2 and doc["t_end"] == 5
        assert len(doc["rows"]) == 3


class TestSimulate:
    def test_basis_state(self, capsys, tmp_path):
        path = tmp_path / "circuit.txt"
        path.write_text(export_circuit(build_cyclic_network(3, 8)) + "\n")
        code, out, _ = run_cli(capsys, "simulate", "--circuit", str(path), "--state", "120")
        assert code == 0
        assert out.strip() == "201 1 0"  # |abc> ends as |bca>

    def test_random_state_is_reproducible(self, capsys, tmp_path):
        path = tmp_path / "circuit.json"
        path.write_text(export_circuit(build_cyclic_network(2, 3), "json"))
        code1, out1, _ = run_cli(capsys, "simulate", "--circuit", str(path),
                                 "--state", "random --seed 5", "--json")
        code2, out2, _ = run_cli(capsys, "simulate", "--circuit", str(path),
                                 "--state", "random --seed 5", "--json")
        assert code1 == code2 == 0
        assert out1 == out2
        amps = json.loads(out1)["amplitudes"]
        assert abs(sum(re * re + im * im for re, im in amps) - 1) < 1e-12

    def test_bad_state_spec(self, capsys, tmp_path):
        path = tmp_path / "c.txt"
        path.write_text(export_circuit(build_cyclic_network(2, 1)))
        code, _, err = run_cli(capsys, "simulate", "--circuit", str(path), "--state", "xyz")
        assert code == 1
        assert "state spec" in err

    def test_missing_file(self, capsys):
        code, _, err = run_cli(capsys, "simulate", "--circuit", "/nonexistent", "--state", "00")
        assert code == 1


class TestClosedForm:
    def test_text_table(self, capsys):
        code, out, _ = run_cli(capsys, "closed-form", "--n", "4", "--count", "26")
        assert code == 0
        assert "1.380277569" in out
        assert "0.547487978" in out  # printed weight agrees to ~2e-10

    def test_json(self, capsys):
        code, out, _ = run_cli(capsys, "closed-form", "--n", "8", "--json")
        doc = json.loads(out)
        assert code == 0
        assert doc["max_deviation"] < 1e-6
        assert len(doc["alphas"]) == 8


class TestExport:
    def test_gatelist(self, capsys):
        code, out, _ = run_cli(capsys, "export", "--d", "2", "--gates", "3")
        assert code == 0
        assert out == "DIM 2 SYSTEMS 2\nCNOT 0 1\nCNOT 1 0\nCNOT 0 1\n"

    def test_json_format(self, capsys):
        code, out, _ = run_cli(capsys, "export", "--d", "3", "--gates", "2",
                               "--format", "json")
        assert json.loads(out) == {"d": 3, "systems": 3, "gates": [[0, 1], [1, 2]]}


class TestCheck:
    def test_all_pass(self, capsys):
        code, out, _ = run_cli(capsys, "check")
        assert code == 0
        assert "FAIL" not in out
        assert out.count("ok  ") == 14

    def test_json(self, capsys):
        code, out, _ = run_cli(capsys, "check", "--json")
        doc = json.loads(out)
        assert doc["ok"] is True
        assert all(c["ok"] for c in doc["checks"])


class TestHarness:
    def test_usage_error_exit_2(self):
        with pytest.raises(SystemExit) as err:
            main(["cycle"])  # missing --d
        assert err.value.code == 2

    def test_bad_argument_values_exit_2(self, capsys):
        code, _, err = run_cli(capsys, "seq", "--d", "4", "--count", "5", "--mod", "1")
        assert code == 2 and "usage error" in err
        code, _, err = run_cli(capsys, "cycle", "--d", "1")
        assert code == 2

    def test_unknown_verb_exit_2(self):
        with pytest.raises(SystemExit) as err:
            main(["frobnicate"])
        assert err.value.code == 2

    def test_help_exits_zero(self, capsys):
        with pytest.raises(SystemExit) as err:
            main(["--help"])
        assert err.value.code == 0
        assert "seq" in capsys.readouterr().out

    def test_determinism_byte_identical(self, capsys):
        runs = set()
        for _ in range(2):
            _, out, _ = run_cli(capsys, "scan", "--max", "9", "--json")
            runs.add(out)
        assert len(runs) == 1

    def test_module_entry_point(self):
        proc = subprocess.run(
            [sys.executable, "-m", "swapnet", "seq", "--d", "4", "--count", "26"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout.strip() == SEQ_D4

    def test_env_budget_default(self):
        proc = subprocess.run(
            [sys.executable, "-m", "swapnet", "cycle", "--d", "10", "--json"],
            capture_output=True, text=True,
            env={"PATH": "/usr/bin:/bin", "SWAPNET_BUDGET": "100"},
        )
        # mod-5 factor needs ~2e6 steps, so a tiny global default gives up
        assert proc.returncode == 3
        assert json.loads(proc.stdout)["inconclusive"] is True
