import json
import shutil
import subprocess

import pytest

from classical_pieri.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, "--json", *argv)
    assert code == 0
    # canonical form: re-serialising gives identical bytes
    assert json.dumps(json.loads(out), sort_keys=True, indent=2) + "\n" == out
    return json.loads(out)


def test_tensor(capsys):
    data = run_json(capsys, "tensor", "--group", "sp", "--n", "1", "--mu", "[1]",
                    "--kind", "sym", "--r", "2")
    assert data["decomposition"] == {"[3]": 1, "[1]": 1}
    code, out, _ = run(capsys, "tensor", "--group", "sp", "--n", "1", "--mu", "[1]",
                       "--kind", "sym", "--r", "2")
    assert code == 0 and out.split() == ["[1]:", "1", "[3]:", "1"]


def test_modify(capsys):
    data = run_json(capsys, "modify", "--group", "o", "--N", "2", "--lambda", "[2,2]")
    assert (data["sign"], data["label"]) == (-1, "[2]")
    data = run_json(capsys, "modify", "--group", "sp", "--n", "1", "--lambda", "[2,2]")
    assert (data["sign"], data["label"]) == (0, None)
    assert run(capsys, "modify", "--group", "o", "--N", "2", "--lambda", "[2,2]")[1].strip() \
        == "sign -1, label [2]"


def test_count(capsys):
    data = run_json(capsys, "count", "--variant", "burrill1", "--k", "3", "--n", "1",
                    "--m", "1", "--side", "both")
    assert (data["a"], data["b"]) == (2, 2)
    assert run(capsys, "count", "--variant", "burrill1", "--k", "3", "--n", "1", "--m", "1")[1] \
        .strip() == "a=2 b=2"
    data = run_json(capsys, "count", "--variant", "main3", "--alpha", "[1,1]", "--N", "3",
                    "--m", "0", "--side", "a")
    assert set(data) == {"variant", "a"}


def test_rules(capsys):
    assert run_json(capsys, "pieri", "--group", "sp", "--n", "1", "--mu", "[1]",
                    "--lambda", "[1]", "--r", "2")["multiplicity"] == 1
    data = run_json(capsys, "pieri", "--group", "o", "--N", "2", "--mu", "[1,1]",
                    "--lambda", "[1,1]", "--r", "2")
    assert data["multiplicity"] == 0 and data["witnesses"] == []
    assert run_json(capsys, "pieri", "--group", "so", "--N", "2", "--mu", "[1]",
                    "--lambda", "[]", "--r", "1")["multiplicity"] == 2
    assert run_json(capsys, "dual-pieri", "--group", "so", "--N", "6", "--mu", "[2,1]",
                    "--lambda", "[2,1]", "--r", "2")["multiplicity"] == 3


def test_character_and_coefficients(capsys):
    data = run_json(capsys, "character", "--group", "so", "--N", "3", "--lambda", "[1]")
    assert data["dimension"] == 3
    assert run_json(capsys, "lr", "--mu", "[1,1]", "--nu", "[1]",
                    "--lambda", "[2,1]")["coefficient"] == 1
    assert run_json(capsys, "nl", "--mu", "[1]", "--nu", "[1]")["product"] == \
        {"[]": 1, "[2]": 1, "[1,1]": 1}


@pytest.mark.parametrize("argv", [
    [],
    ["bogus"],
    ["tensor", "--group", "sp", "--mu", "[1]", "--r", "1"],
    ["tensor", "--group", "sp", "--n", "1", "--mu", "[1,2]", "--r", "1"],
    ["tensor", "--group", "sp", "--n", "1", "--mu", "[1,1]", "--r", "1"],
    ["count", "--variant", "main1", "--n", "1", "--m", "1"],
    ["count", "--variant", "main4", "--alpha", "[1]", "--n", "1", "--m", "3"],
    ["count", "--variant", "main1", "--alpha", "oops", "--n", "1", "--m", "1"],
    ["verify", "modification", "--grid", "nonsense"],
    ["verify", "modification", "--grid", "unknown_key=1"],
])
def test_usage_errors_exit_1(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1 and "error" in err


def test_verify_pass_and_report(capsys, tmp_path):
    report = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "standard-pieri", "--grid", "ranks=[1,2]",
                       "--report", str(report))
    assert code == 0 and out.startswith("PASS standard-pieri")
    data = json.loads(report.read_text())
    assert data["passed"] and data["suites"][0]["suite"] == "standard-pieri"


def test_verify_failure_exits_2(capsys, monkeypatch):
    from classical_pieri import suites

    def broken(**grid):
        rep = suites.SuiteReport("standard-pieri", grid)
        rep.check({"case": 1}, 1, 2)
        return rep

    monkeypatch.setitem(suites.SUITES, "standard-pieri", broken)
    code, out, _ = run(capsys, "verify", "standard-pieri")
    assert code == 2 and out.startswith("FAIL")


@pytest.mark.skipif(shutil.which("classical-pieri") is None, reason="console script not installed")
def test_console_script():
    out = subprocess.run(["classical-pieri", "modify", "--group", "o", "--N", "2",
                          "--lambda", "[2,2]"], capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout.strip() == "sign -1, label [2]"
