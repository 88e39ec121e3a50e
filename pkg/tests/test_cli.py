import json

import pytest

from qmarkov.cli import EXIT_DISAGREE, EXIT_OK, EXIT_USAGE, RunConfig, main
from qmarkov.errors import QMarkovError
from qmarkov.laurent import LaurentPoly

from reference_values import GOLDEN


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_all_2_5(capsys):
    code, out, _ = run(capsys, "compute", "2/5", "--method", "all")
    assert code == EXIT_OK
    assert "verdict: OK" in out
    assert out.count(str(GOLDEN[194][1])) == 6


def test_bare_label_is_compute(capsys):
    code, out, _ = run(capsys, "0/1")
    assert code == EXIT_OK
    assert out.strip() == "1"


def test_compute_snake_json(capsys):
    code, out, _ = run(capsys, "compute", "3/5", "--method", "snake", "--json")
    assert code == EXIT_OK
    obj = json.loads(out)
    assert obj["value_at_1"] == "433"
    assert LaurentPoly.from_json(obj).eval_at_one() == 433


@pytest.mark.parametrize("method", ["mutation", "cohn", "snake", "bruteforce"])
def test_compute_methods_agree(capsys, method):
    code, out, _ = run(capsys, "compute", "2/3", "--method", method)
    assert code == EXIT_OK
    assert out.strip() == str(GOLDEN[29][1])


def test_compute_all_json_verdict(capsys):
    code, out, _ = run(capsys, "compute", "1/1", "--method", "all", "--json")
    obj = json.loads(out)
    assert code == EXIT_OK and obj["verdict"] == "OK"
    assert obj["methods"]["transfer"] is not None


def test_compute_all_skips_bruteforce_over_bound(capsys):
    code, out, _ = run(capsys, "compute", "3/5", "--method", "all", "--oracle-bound", "10")
    assert code == EXIT_OK
    assert "(skipped)" in out


@pytest.mark.parametrize(
    "argv",
    [["compute", "3/2"], ["compute", "a/b"], ["nope", "--x"], ["snake", "0/1"], ["verify", "--n-range", "3"]],
)
def test_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == EXIT_USAGE


def test_bruteforce_bound_error(capsys):
    code, _, err = run(capsys, "compute", "3/5", "--method", "bruteforce", "--oracle-bound", "100")
    assert code == EXIT_USAGE
    assert "oracle bound" in err


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--max-denominator", "8", "--json")
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["ok"] and report["labels"] == 23
    assert report["invariants"]["method_agreement"]["failed"] == 0
    code2, out2, _ = run(capsys, "verify", "--max-denominator", "8", "--json")
    assert out2 == out


def test_verify_bound_one(capsys):
    code, out, _ = run(capsys, "verify", "--max-denominator", "1")
    assert code == EXIT_OK
    assert "labels with denominator <= 1: 2" in out


def test_tree_json_lines(capsys):
    code, out, _ = run(capsys, "tree", "--max-denominator", "3")
    lines = [json.loads(x) for x in out.splitlines()]
    assert [x["t"] for x in lines] == ["0/1", "1/3", "1/2", "2/3", "1/1"]
    assert [x["m"] for x in lines] == ["1", "13", "5", "29", "2"]


def test_tree_csv(capsys):
    code, out, _ = run(capsys, "tree", "--max-denominator", "2", "--csv")
    rows = out.strip().splitlines()
    assert rows[0] == "t,m,min_exp,coeffs"
    assert rows[2] == "1/2,5,-2,1 1 1 1 1"


def test_snake_dot_and_mu(capsys, tmp_path):
    path = tmp_path / "g.dot"
    code, out, _ = run(capsys, "snake", "3/5", "--dot", str(path), "--mu-labels")
    assert code == EXIT_OK
    assert path.read_text().startswith('graph "snake_3_5"')
    assert "(433)" in out


def test_snake_dot_stdout(capsys):
    code, out, _ = run(capsys, "snake", "1/1", "--dot", "-")
    assert out.startswith('graph "snake_1_1"')


def test_snake_tilde_json(capsys):
    code, out, _ = run(capsys, "snake", "2/3", "--tilde", "--json")
    obj = json.loads(out)
    assert obj["tilde"] is True
    assert LaurentPoly.from_json(obj["polynomial"]).eval_at_one() == 29


def test_cohn_check(capsys):
    code, out, _ = run(capsys, "cohn", "3/5", "--check-relations", "--json")
    obj = json.loads(out)
    assert code == EXIT_OK
    assert obj["checks"] == {"entry_relations": True, "n_independent": True}


@pytest.mark.parametrize("label, code", [("1/3", EXIT_OK), ("2/5", EXIT_OK)])
def test_conjecture(capsys, label, code):
    got, out, _ = run(capsys, "conjecture", label, "--json")
    obj = json.loads(out)
    assert got == code
    assert obj["reference_available"] == (label == "1/3")
    if label == "1/3":
        assert obj["matches_reference"] is True


def test_run_config_invariants():
    with pytest.raises(QMarkovError):
        RunConfig(command="verify", oracle_bound=0)
    with pytest.raises(QMarkovError):
        RunConfig(command="cohn", n_range=(3, 1))


def test_exit_codes_distinct():
    assert len({EXIT_OK, EXIT_USAGE, EXIT_DISAGREE}) == 3
