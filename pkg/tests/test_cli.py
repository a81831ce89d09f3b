import json
import subprocess
import sys

import pytest

from betaqt import cli, partitions
from betaqt.exactalg import ONE, Q, parse
from betaqt.symfunc import SymFunc


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_poly_macdonald_one(capsys):
    code, out, _ = run(capsys, "poly", "--basis", "macdonald", "--partition", "1")
    assert code == 0
    data = json.loads(out)
    assert data["schema"] == 1
    assert data["terms"] == [{"partition": "1", "coeff": "1"}]


def test_poly_jack_two(capsys):
    code, out, _ = run(capsys, "poly", "--basis", "jack", "--partition", "2")
    data = json.loads(out)
    coeffs = {t["partition"]: parse(t["coeff"]) for t in data["terms"]}
    assert coeffs == {"1,1": 1 / (1 + parse("alpha")), "2": parse("alpha/(1+alpha)")}


def test_poly_schur_text_and_json(capsys):
    code, out, _ = run(capsys, "poly", "--basis", "schur", "--partition", "1,1")
    assert code == 0
    f = SymFunc.from_json(json.loads(out))
    assert f == (SymFunc.p((1, 1)) - SymFunc.p((2,))) / 2
    code, out, _ = run(capsys, "poly", "--basis", "schur", "--partition", "1,1", "--output-format", "text")
    assert "p_(2): -1/2" in out and "p_(1,1): 1/2" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["poly", "--basis", "jack", "--partition", "1,2"],
        ["poly", "--basis", "jack", "--partition", "x"],
        ["poly", "--basis", "hall", "--partition", "1"],
        ["moments", "--family", "qt", "--max-p", "0"],
        ["moments", "--family", "gue", "--max-p", "1"],
        ["verify", "--q", "0.5"],
        ["verify", "--q", "3/2"],
        ["verify", "--a", "1/4"],
        ["verify", "--suite", "everything"],
        [],
    ],
)
def test_usage_errors_exit_two(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert "usage" in err


def test_moments_qt(capsys):
    code, out, _ = run(capsys, "moments", "--family", "qt", "--max-p", "3")
    data = json.loads(out)
    assert data["schema"] == 1 and data["family"] == "qt"
    assert parse(data["entries"][0]["value"]) == parse("(1+a)*(1-u)/(1-t)")
    assert parse(data["entries"][2]["value"]) == parse(cli.QT_CLOSED[3])


def test_moments_gbeta_csv(capsys, tmp_path):
    target = tmp_path / "m.csv"
    code, out, _ = run(capsys, "moments", "--family", "gbeta", "--max-p", "2", "--format", "csv", "--output", str(target))
    assert code == 0 and out == ""
    rows = target.read_text().splitlines()
    assert rows[0] == "p,value"
    assert parse(rows[1].split(",", 1)[1]) == parse(cli.GBETA_CLOSED[1])
    assert parse(rows[2].split(",", 1)[1]) == parse(cli.GBETA_CLOSED[2])


def test_verify_symbolic_passes(capsys):
    code, out, err = run(capsys, "verify", "--suite", "symbolic", "--max-degree", "4")
    report = json.loads(out)
    assert code == 0, err
    assert report["status"] == "pass" and report["schema"] == 1
    ids = [c["id"] for c in report["checks"]]
    assert "norm.qt" in ids and "duality.macdonald" in ids
    assert "duration_seconds" not in report


def test_verify_lattice_passes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "lattice", "--depth", "60", "--q", "1/2", "--a", "-3/4")
    assert code == 0
    assert json.loads(out)["status"] == "pass"


def test_verify_gaussian_passes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "gaussian", "--max-degree", "4")
    assert code == 0


def test_verify_output_is_byte_stable(capsys, tmp_path):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for path in paths:
        assert cli.main(["verify", "--suite", "symbolic", "--max-degree", "3", "--output", str(path)]) == 0
    capsys.readouterr()
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_verify_timing_flag(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "gaussian", "--max-degree", "2", "--timing")
    assert code == 0 and "duration_seconds" in json.loads(out)


def test_corrupted_hook_product_fails_verification(capsys, monkeypatch):
    real = partitions.hooks_qt

    def corrupted(kappa):
        lower, upper = real(kappa)
        return (lower * (1 + Q), upper) if kappa == (2, 1) else (lower, upper)

    monkeypatch.setattr(partitions, "hooks_qt", corrupted)
    code, out, err = run(capsys, "verify", "--suite", "all")
    assert code == 1
    report = json.loads(out)
    failing = {c["id"]: c for c in report["checks"] if c["status"] == "fail"}
    assert "norm.qt" in failing
    assert "Macdonald orthogonality" in failing["norm.qt"]["reference"]
    assert "P_2,1" in failing["norm.qt"]["witness"]
    assert "FAIL" in err


def test_module_entry_point():
    result = subprocess.run(
        [sys.executable, "-m", "betaqt", "poly", "--basis", "macdonald", "--partition", "1"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert result.returncode == 0
    assert json.loads(result.stdout)["terms"][0]["coeff"] == "1"
