import json
import subprocess
import sys

import pytest

from cdtgraphs.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestCatalog:
    def test_list(self, capsys):
        code, out, _ = run(capsys, "catalog", "list")
        rows = json.loads(out)
        assert code == 0 and len(rows) == 12
        assert [r["eta"] for r in rows] == [4, 9, 6, 12, 28, 18, 12, 20, 24, 90, 216, 136]

    def test_build_json_and_dot(self, capsys, tmp_path):
        out = tmp_path / "pet.json"
        code, _, _ = run(capsys, "catalog", "build", "petersen", "--out", str(out), "--dot")
        assert code == 0
        assert len(json.loads(out.read_text())["edges"]) == 15
        assert out.with_suffix(".dot").read_text().count("--") == 15

    def test_dot_to_stdout(self, capsys):
        code, out, _ = run(capsys, "catalog", "build", "k4", "--dot")
        assert code == 0 and out.startswith("graph") and out.count("--") == 6

    def test_build_needs_name(self, capsys):
        assert run(capsys, "catalog", "build")[0] == 2

    def test_unknown_graph(self, capsys):
        code, _, err = run(capsys, "cycles", "enum", "nauru")
        assert code == 2 and "unknown graph" in err


class TestCycles:
    def test_girth_cycles(self, capsys):
        code, out, _ = run(capsys, "cycles", "enum", "heawood")
        data = json.loads(out)
        assert code == 0 and (data["girth"], data["count"]) == (6, 28)

    def test_length(self, capsys):
        data = json.loads(run(capsys, "cycles", "enum", "petersen", "--length", "6")[1])
        assert data["count"] == 10

    def test_graph_file(self, capsys, tmp_path):
        run(capsys, "catalog", "build", "q3", "--out", str(tmp_path / "q3.json"))
        data = json.loads(run(capsys, "cycles", "enum", str(tmp_path / "q3.json"))[1])
        assert data["count"] == 6

    def test_bad_json(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{nope")
        assert run(capsys, "cycles", "enum", str(bad))[0] == 1


class TestOac:
    def test_solvable(self, capsys):
        code, out, _ = run(capsys, "oac", "solve", "desargues")
        data = json.loads(out)
        assert code == 0 and data["balanced"] and data["count"] == 2

    def test_obstructed(self, capsys):
        code, out, err = run(capsys, "oac", "solve", "petersen")
        data = json.loads(out)
        assert code == 1 and not data["balanced"] and data["obstruction"]
        assert "no orientation assignment" in err

    def test_k_override(self, capsys):
        data = json.loads(run(capsys, "oac", "solve", "q3", "--k", "2")[1])
        assert data["k"] == 2 and data["count"] == 2


class TestZip:
    def test_coxeter(self, capsys):
        code, out, err = run(capsys, "zip", "coxeter")
        data = json.loads(out)
        assert code == 0 and len(data["vertices"]) == 56 and len(data["edges"]) == 84
        assert "56 vertices" in err

    def test_quiet(self, capsys):
        code, _, err = run(capsys, "zip", "coxeter", "-q")
        assert code == 0 and err == ""

    def test_oac_file(self, capsys, tmp_path):
        path = tmp_path / "oac.json"
        run(capsys, "export", "k4", "oac", "--out", str(path))
        code, out, _ = run(capsys, "zip", "k4", "--oac", str(path))
        assert code == 0 and len(json.loads(out)["edges"]) == 6

    def test_pappus_strict_oac_file_fails(self, capsys, tmp_path):
        path = tmp_path / "oac.json"
        run(capsys, "export", "pappus", "oac", "--out", str(path))
        assert run(capsys, "zip", "pappus", "--oac", str(path))[0] == 1
        assert run(capsys, "zip", "pappus", "--oac", str(path), "--lenient")[0] == 0

    def test_unsupported_k(self, capsys):
        assert run(capsys, "zip", "tutte")[0] == 1

    def test_graph_file_needs_oac(self, capsys, tmp_path):
        run(capsys, "catalog", "build", "k4", "--out", str(tmp_path / "k4.json"))
        assert run(capsys, "zip", str(tmp_path / "k4.json"))[0] == 2


class TestAnalyze:
    def test_lkn(self, capsys):
        code, out, _ = run(capsys, "analyze", "lkn", "--n", "5")
        assert code == 0 and json.loads(out)["passed"]

    def test_lkn_needs_n(self, capsys):
        assert run(capsys, "analyze", "lkn")[0] == 2
        assert run(capsys, "analyze", "lkn", "--n", "12")[0] == 2

    def test_desargues(self, capsys):
        assert run(capsys, "analyze", "desargues")[0] == 0

    def test_pappus(self, capsys):
        assert run(capsys, "analyze", "pappus")[0] == 0

    def test_coxeter_reports_the_dual_chromatic_number(self, capsys):
        code, out, _ = run(capsys, "analyze", "coxeter")
        data = json.loads(out)
        assert data["report"]["fano_coloring"]["valid"]
        assert data["report"]["dual"]["chromatic_number"] == 4
        # the eight-colour requirement is not met, so the verb reports failure
        assert code == 1 and not data["passed"]


class TestVerifyAll:
    def test_only_graph(self, capsys):
        code, out, err = run(capsys, "verify-all", "--only", "desargues")
        data = json.loads(out)
        assert code == 0 and data["passed"] and data["command"] == ["verify-all", "--only", "desargues"]
        assert "ok   table.n:desargues" in err

    def test_only_lkn(self, capsys):
        assert run(capsys, "verify-all", "--only", "lkn")[0] == 0

    def test_full_run_fails_on_documented_disagreements(self, capsys):
        code, out, _ = run(capsys, "verify-all")
        data = json.loads(out)
        assert code == 1 and data["summary"]["failed"] == 5

    def test_stable_output(self, capsys):
        first = run(capsys, "verify-all", "--only", "coxeter")[1]
        second = run(capsys, "verify-all", "--only", "coxeter")[1]
        assert first == second

    def test_bad_only(self, capsys):
        assert run(capsys, "verify-all", "--only", "nauru")[0] == 2


class TestExport:
    @pytest.mark.parametrize("what", ["graph", "oac", "zip", "dual"])
    def test_coxeter(self, capsys, what):
        code, out, _ = run(capsys, "export", "coxeter", what)
        assert code == 0 and json.loads(out)

    def test_dual_size(self, capsys):
        data = json.loads(run(capsys, "export", "coxeter", "dual")[1])
        assert data["n"] == 24 and len(data["edges"]) == 24 * 7 // 2

    def test_foster_zip_prints_certificate(self, capsys):
        code, out, _ = run(capsys, "export", "foster", "zip")
        data = json.loads(out)
        assert code == 1 and "error" in data and len(data["obstruction"]) >= 3

    def test_heawood_oac(self, capsys):
        assert run(capsys, "export", "heawood", "oac")[0] == 1

    def test_zip_dot_file(self, capsys, tmp_path):
        out = tmp_path / "y.json"
        assert run(capsys, "export", "desargues", "zip", "--out", str(out), "--dot")[0] == 0
        assert out.with_suffix(".dot").read_text().count("--") == 60


def test_usage_errors_exit_two():
    with pytest.raises(SystemExit) as info:
        main(["oac"])
    assert info.value.code == 2


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cdtgraphs.cli", "catalog", "list", "-q"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and len(json.loads(proc.stdout)) == 12
