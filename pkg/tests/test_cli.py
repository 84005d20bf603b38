import json
import subprocess
import sys

import pytest

from waringhf.cli import EXIT_BUDGET, EXIT_OK, EXIT_USAGE, EXIT_VERIFY, main
from waringhf.io import write_ideal
from waringhf.liaison import RandomConfig, ci_through
from waringhf.points import PointSet
from waringhf.scalars import GF

F = GF(32003)


@pytest.fixture
def files(tmp_path):
    A = PointSet([(1, 0, 0), (0, 1, 0), (1, 1, 1)], F)
    ci = ci_through(A.ideal, (2, 3), RandomConfig(3))
    paths = {}
    for name, I in [("A", A.ideal), ("ci", ci), ("P", PointSet([(1, 2, 3)], F).ideal),
                    ("Q", PointSet([(3, 1, 2)], F).ideal)]:
        paths[name] = tmp_path / f"{name}.txt"
        write_ideal(paths[name], I)
    return paths


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_hf(capsys, files):
    code, out, _ = run(capsys, "hf", files["A"], "--json")
    assert code == EXIT_OK
    data = json.loads(out)
    assert (data["dim"], data["degree"]) == (1, 3)
    assert data["first_difference"] == [1, 2]


def test_link(capsys, files):
    code, out, _ = run(capsys, "link", files["ci"], files["A"], "--json")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["degree"] == data["expected_degree"] == 3
    assert data["ok"]


def test_apolar_common(capsys, files):
    code, out, _ = run(capsys, "apolar-common", files["P"], files["P"], "--degree", 3)
    assert code == EXIT_OK
    assert out.strip()
    code, out, _ = run(capsys, "apolar-common", files["P"], files["Q"], "--degree", 3, "--json")
    assert code == EXIT_VERIFY
    assert json.loads(out)["dimension"] == 0


def test_certify(capsys):
    code, out, _ = run(capsys, "certify", "--dh", "1,2,3,4,5,6,6,2,1", "--degree", 13)
    assert (code, out.strip()) == (EXIT_OK, "28")
    code, out, _ = run(capsys, "certify", "--dh", "1,2,3,4,5,6,6,2,1", "--degree", 13, "--pointwise-tail")
    assert (code, out.strip()) == (EXIT_OK, "30")
    code, out, _ = run(capsys, "certify", "--dh", "1,2,3,4", "--degree", 1)
    assert code == EXIT_VERIFY
    code, _, err = run(capsys, "certify", "--dh", "1,x", "--degree", 3)
    assert code == EXIT_USAGE and "--dh" in err


def test_gb_orders(capsys, files):
    code, out, _ = run(capsys, "gb", files["A"], "--order", "lex", "--json")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["order"] == "lex" and data["basis"]
    code, _, err = run(capsys, "gb", files["A"], "--order", "bogus")
    assert code == EXIT_USAGE


def test_malformed_file(capsys, tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("ring x,y,z over qq\nx*y +\n")
    code, _, err = run(capsys, "hf", p)
    assert code == EXIT_USAGE
    assert f"{p}:2:" in err


def test_missing_file(capsys, tmp_path):
    code, _, _ = run(capsys, "hf", tmp_path / "nope.txt")
    assert code == EXIT_USAGE


def test_field_mismatch(capsys, files):
    code, _, err = run(capsys, "hf", files["A"], "--field", "qq")
    assert code == EXIT_USAGE and "--field" in err


def test_budget_exceeded(capsys, files):
    code, _, err = run(capsys, "link", files["ci"], files["A"], "--budget", "1")
    assert code == EXIT_BUDGET


def test_usage_errors(capsys):
    assert run(capsys)[0] == EXIT_USAGE
    assert run(capsys, "frobnicate")[0] == EXIT_USAGE
    assert run(capsys, "example1", "--field", "fp:12")[0] == EXIT_USAGE
    assert run(capsys, "--help")[0] == EXIT_OK


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "waringhf", "certify", "--dh", "1,2,2", "--degree", "4", "--json"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["known_profile"] == [1, 2, 2]


def test_budget_does_not_leak(capsys, files):
    from waringhf.groebner import default_budget
    before = default_budget()
    run(capsys, "link", files["ci"], files["A"], "--budget", "1")
    assert default_budget() == before
