import json
import subprocess
import sys


from normalsys.cli import run

F2_ARGS = ["-p", "x^2 + y^2 - 5", "-q", "x*y - 2"]


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def error_payload(err):
    assert err.count("\n") == 1
    return json.loads(err)


class TestCommands:
    def test_solve_json(self, capsys):
        code, out, _ = call(capsys, "solve", *F2_ARGS, "--json")
        assert code == 0
        data = json.loads(out)
        assert data["bezout"] == 4 and data["distinct"] == 4 and data["mult_sum"] == 4
        assert {(s["x"], s["y"], s["mult"]) for s in data["solutions"]} == {
            ("1", "2", 1), ("2", "1", 1), ("-1", "-2", 1), ("-2", "-1", 1)}
        assert data["chart"] == [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]

    def test_solve_text(self, capsys):
        code, out, _ = call(capsys, "solve", "-p", "x*y - 1", "-q", "x + y - 2")
        assert code == 0
        assert "solution (1, 1) multiplicity 2" in out
        assert "multiplicity sum: 2" in out

    def test_solve_escaped(self, capsys):
        code, out, _ = call(capsys, "solve", "-p", "x*y - 1", "-q", "x*y - x", "--json")
        data = json.loads(out)
        assert [s["point"] for s in data["escaped"]] == [["0", "1", "0"], ["1", "0", "0"]]
        assert data["mult_sum"] == 4

    def test_check_normal(self, capsys):
        code, out, _ = call(capsys, "check-normal", "-e", "x*y - 1", "-e", "x^2 + x*y - 2*x",
                            "-e", "x*y + y^2 - 2*y", "--json")
        assert code == 0
        assert out == '{"normal":true,"certificate":"-1"}\n'

    def test_normalize(self, capsys):
        code, out, _ = call(capsys, "normalize", *F2_ARGS, "--json")
        data = json.loads(out)
        assert data["N"] == 3 and data["certificate"] == "1" and data["preserved"] is True
        assert data["base_points"] == {"p": [0, 0], "q": [1, 0]}

    def test_resultant(self, capsys):
        code, out, _ = call(capsys, "resultant", *F2_ARGS, "--json")
        data = json.loads(out)
        assert data["degree"] == 4 and data["leading_forms_resultant"] == "1"

    def test_chart(self, capsys):
        code, out, _ = call(capsys, "chart", "-p", "x*y - 1", "-q", "x*y - x", "--json")
        data = json.loads(out)
        assert data["chart"][2] == ["1", "1", "1"] and data["identity"] is False

    def test_pde_basis(self, capsys):
        code, out, _ = call(capsys, "pde-basis", "-p", "Dx*Dy - 1", "-q", "Dx + Dy - 2")
        assert code == 0
        assert out == "exp(x + y)\n(x - y)*exp(x + y)\n"

    def test_audit(self, capsys):
        code, out, _ = call(capsys, "audit", "-p", "x*y - 1", "-q", "x + y - 2", "--json")
        data = json.loads(out)
        assert data["passed"] is True and data["checks"][0]["dual_mult"] == 2


class TestErrors:
    def test_infinite(self, capsys):
        code, _, err = call(capsys, "solve", "-p", "x*y - 1", "-q", "x*y - 1")
        assert code == 2
        assert error_payload(err) == {"error": "solution set not finite", "kind": "domain"}

    def test_parse(self, capsys):
        code, _, err = call(capsys, "solve", "-p", "x**y", "-q", "y")
        assert code == 1
        payload = error_payload(err)
        assert payload["kind"] == "parse" and payload["column"] == 3

    def test_usage(self, capsys):
        code, _, err = call(capsys, "solve", "-p", "x")
        assert code == 1 and error_payload(err)["kind"] == "usage"
        code, _, err = call(capsys, "frobnicate")
        assert code == 1 and error_payload(err)["kind"] == "usage"

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = call(capsys, "solve", "-f", str(tmp_path / "nope.txt"))
        assert code == 1 and error_payload(err)["kind"] == "usage"

    def test_budget_exhausted(self, capsys, monkeypatch):
        monkeypatch.setenv("NF_CHART_BUDGET", "0")
        code, _, err = call(capsys, "solve", "-p", "x*y - 1", "-q", "x*y - x")
        assert code == 2
        assert error_payload(err)["error"] == "no chart found in search budget"

    def test_budget_flag(self, capsys):
        code, _, _ = call(capsys, "solve", "-p", "x*y - 1", "-q", "x*y - x", "--budget", "0")
        assert code == 2


class TestInputs:
    def test_line_file(self, capsys, tmp_path):
        f = tmp_path / "sys.txt"
        f.write_text("# circle and hyperbola\nx^2 + y^2 - 5\n\nx*y - 2\n")
        code, out, _ = call(capsys, "solve", "-f", str(f), "--json")
        assert code == 0 and json.loads(out)["distinct"] == 4

    def test_json_job(self, capsys, tmp_path):
        f = tmp_path / "job.json"
        f.write_text(json.dumps({"p": "x*y - 1", "q": "x + y - 2"}))
        code, out, _ = call(capsys, "solve", "-f", str(f), "--json")
        assert json.loads(out)["mult_sum"] == 2

    def test_json_equations(self, capsys, tmp_path):
        f = tmp_path / "ns.json"
        f.write_text(json.dumps({"equations": ["x + y", "x - y"]}))
        code, out, _ = call(capsys, "check-normal", "-f", str(f), "--json")
        assert json.loads(out) == {"normal": True, "certificate": "-2"}


def test_subprocess_byte_identical():
    cmd = [sys.executable, "-m", "normalsys", "solve", "-p", "x^2 - 2", "-q", "y^2 - 3", "--json"]
    runs = [subprocess.run(cmd, capture_output=True, check=True).stdout for _ in range(3)]
    assert runs[0] == runs[1] == runs[2]
    assert json.loads(runs[0])["distinct"] == 4


def test_subprocess_exit_code():
    cmd = [sys.executable, "-m", "normalsys", "solve", "-p", "x", "-q", "x"]
    proc = subprocess.run(cmd, capture_output=True, text=True)
    assert proc.returncode == 2 and proc.stdout == ""
    assert json.loads(proc.stderr)["kind"] == "domain"
