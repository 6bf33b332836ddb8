import json
import shutil
import subprocess

import pytest

from hessk3.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_invariants_text(capsys):
    code, out, _ = run(capsys, "invariants", "--lambda", "1,1,1,1,1/4")
    assert code == 0
    assert "catalog  = cayley" in out
    assert "disc32   = 0" in out


def test_invariants_json(capsys):
    code, out, _ = run(capsys, "invariants", "--lambda", "1,1,1,1,1", "--json")
    obj = json.loads(out)
    assert code == 0
    assert obj["disc32"] == "-1215"
    assert obj["eckardt_points"] == 10
    assert obj["catalog_name"] == "clebsch"
    assert set(obj["flags"]) >= {"boundary", "kummer", "non_sylvester"}


@pytest.mark.parametrize("arg", ["1,2,3", "1,2,3,4,x", "0,0,0,0,0", "1,2,3,4,5/0"])
def test_invariants_bad_input(capsys, arg):
    code, _, err = run(capsys, "invariants", "--lambda", arg)
    assert code == 2 and "error" in err


def test_lattice_report(capsys):
    code, out, _ = run(capsys, "lattice", "--gram", "[[4,9],[9,24]]", "--report", "--json")
    obj = json.loads(out)
    assert code == 0
    assert obj["det"] == "15" and obj["reduced"] == [["4", "1"], ["1", "4"]]
    assert obj["signature"] == [2, 0]


def test_lattice_from_file(capsys, tmp_path):
    p = tmp_path / "g.json"
    p.write_text("[[0,1],[1,0]]")
    code, out, _ = run(capsys, "lattice", "--gram", f"@{p}", "--json")
    assert code == 0 and json.loads(out)["det"] == "-1"


@pytest.mark.parametrize("gram", ["[[1,2],[3,4]]", "[[1,1],[1,1]]", "not json", "[[1,\"a\"],[1,1]]"])
def test_lattice_bad_input(capsys, gram):
    code, _, _ = run(capsys, "lattice", "--gram", gram)
    assert code == 2


def test_slh(capsys):
    code, out, _ = run(capsys, "slh", "1", "1", "1")
    assert (code, out.strip()) == (0, "no embedding")
    code, out, _ = run(capsys, "slh", "2", "3", "1", "--json")
    obj = json.loads(out)
    assert code == 0 and obj["verified"] is True
    code, _, _ = run(capsys, "slh", "1", "1", "2")
    assert code == 2


def test_wps(capsys):
    code, out, _ = run(capsys, "wps", "eq", "(-8:1:0:0:0)", "(8:1:0:0:0)")
    assert (code, out.strip()) == (0, "equal")
    code, out, _ = run(capsys, "wps", "eq", "1:1:0:0:0", "1:2:0:0:0")
    assert out.strip() == "not equal"
    code, out, _ = run(capsys, "wps", "singular", "0:0:0:0:3", "--json")
    assert json.loads(out) == {"point": ["0", "0", "0", "0", "3"], "singular": True, "component": "(0:0:0:0:1)"}
    assert run(capsys, "wps", "singular", "0:0:0:0:0")[0] == 2
    assert run(capsys, "wps", "eq", "1:0:0:0:0")[0] == 2


def test_limit(capsys):
    fam = json.dumps({"lambda": [[[0, "1"]]] * 4 + [[[-3, "1"]]]})
    code, out, _ = run(capsys, "limit", "--family", fam, "--json")
    obj = json.loads(out)
    assert code == 0
    assert obj["point"] == ["-8", "1", "0", "0", "0"]
    assert obj["flags"]["cyclic_locus"]
    assert run(capsys, "limit", "--family", '{"lambda": [[[0, "1"]]]}')[0] == 2


def test_repro_single(capsys):
    code, out, _ = run(capsys, "repro", "hessian-identity")
    assert code == 0 and "PASS" in out
    assert run(capsys, "repro", "no-such-tag")[0] == 2


def test_repro_failing_task_exit_code(capsys):
    code, out, _ = run(capsys, "repro", "clebsch")
    assert code == 1 and "FAIL" in out


def test_repro_json_omits_timing(capsys):
    code, out, _ = run(capsys, "repro", "ns-gen", "--json", "--no-timing")
    assert code == 0 and "seconds" not in out
    code, out, _ = run(capsys, "repro", "ns-gen", "--json")
    assert "seconds" in out


def test_usage_errors(capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, "bogus")[0] == 2


@pytest.mark.skipif(shutil.which("hessk3") is None, reason="console script not installed")
def test_console_script():
    out = subprocess.run(["hessk3", "wps", "singular", "0:1:0:2:0"], capture_output=True, text=True)
    assert out.returncode == 0 and "singular" in out.stdout
