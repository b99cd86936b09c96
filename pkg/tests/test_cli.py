import json

import pytest

from pfafflab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_pass_and_json(capsys, tmp_path):
    path = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "algebra", "--n", "5", "--json", str(path))
    assert code == 0
    doc = json.loads(path.read_text())
    assert doc["suite"] == "algebra"
    assert {r["status"] for r in doc["records"]} == {"pass"}
    assert {"check", "anchor", "params", "status"} <= set(doc["records"][0])


def test_verify_unknown_suite(capsys):
    with pytest.raises(SystemExit) as e:
        main(["verify", "nonsense"])
    assert e.value.code == 2


def test_verify_singular_only_exit(capsys):
    code, out, _ = run(capsys, "verify", "mz", "--n", "7")
    assert code == 3
    assert "skipped-singular" in out


def test_branch_trivial(capsys):
    code, out, _ = run(capsys, "branch", "--n", "5", "--lambda", "0,0")
    assert code == 0
    assert "1 labels" in out


def test_branch_small_module_is_deterministic(capsys):
    first = run(capsys, "branch", "--n", "5", "--lambda", "-1,-1")
    second = run(capsys, "branch", "--n", "5", "--lambda", "-1,-1")
    assert first[0] == 0 and first == second
    assert "PfF_hat xi[0;-1,-1]" in first[1]


def test_branch_reports_failures(capsys):
    code, out, _ = run(capsys, "branch", "--n", "5", "--lambda", "-1,-2")
    assert code == 1


def test_branch_usage_errors(capsys):
    assert run(capsys, "branch", "--n", "5", "--lambda", "1,0")[0] == 2
    assert run(capsys, "branch", "--n", "6", "--lambda", "0,0,0")[0] == 2


def test_rep_and_cache(capsys, tmp_path):
    code, out, _ = run(capsys, "rep", "--n", "5", "--shape", "1,1", "--cache-dir", str(tmp_path))
    assert code == 0 and "dimension 10" in out and "built" in out
    code, out, _ = run(capsys, "rep", "--n", "5", "--shape", "1,1", "--cache-dir", str(tmp_path))
    assert code == 0 and "loaded" in out


def test_rep_empty_module(capsys, tmp_path):
    code, out, _ = run(capsys, "rep", "--n", "3", "--shape", "2,2", "--cache-dir", str(tmp_path))
    assert code == 4 and "empty" in out


def test_pf_symbolic(capsys):
    code, out, _ = run(capsys, "pf", "--n", "5", "--subset", "0,1", "--symbolic")
    assert code == 0 and out.strip() == "-1 * F[-1,0]"
    code, out, _ = run(capsys, "pf", "--n", "5", "--subset", "-1,1", "--symbolic")
    assert out.strip() == "-1 * F[-1,-1]"
    code, out, _ = run(capsys, "pf", "--n", "5", "--hat", "2", "--symbolic")
    assert code == 0 and out.strip() == "1 * F[-1,-2]F[0,-1] + -1 * F[0,-2]F[-1,-1] + 1 * F[1,-2]F[-1,0]"


def test_pf_tableau_and_xi(capsys):
    code, out, _ = run(capsys, "pf", "--n", "5", "--hat", "2", "--tableau", "1,2")
    assert code == 0 and out.strip()
    code, out, _ = run(capsys, "pf", "--n", "5", "--hat", "2", "--xi", "--lambda", "-1,-1", "--mu", "-1",
                       "--nu", "-1,-1", "--sigma", "0")
    assert code == 0 and out.startswith("xi = ")


def test_pf_usage_errors(capsys):
    assert run(capsys, "pf", "--n", "5", "--subset", "0,1,2", "--symbolic")[0] == 2
    assert run(capsys, "pf", "--n", "5", "--hat", "2", "--xi")[0] == 2
    assert run(capsys, "pf", "--n", "6", "--hat", "2", "--symbolic")[0] == 2
