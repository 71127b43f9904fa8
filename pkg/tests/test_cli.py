import json
import subprocess
import sys

import pytest

from oracles import partition_count
from skewknuth.cli import COUNT_METHODS, main
from skewknuth.partitions import generate_partitions


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("mu, m, expected", [("3,2,1", 3, "2"), ("4", 4, "1"), ("3,2,1", 2, "8")])
def test_count(capsys, mu, m, expected):
    code, out, _ = run(capsys, "count", "--mu", mu, "--m", str(m), "--method", "closed")
    assert code == 0
    assert json.loads(out) == {"mu": mu, "m": m, "method": "closed", "value": expected}


def test_count_domain_error(capsys):
    code, out, err = run(capsys, "count", "--mu", "3,2,1", "--m", "4", "--method", "closed")
    assert code == 2 and out == ""
    assert "shorter than m" in err and err.count("\n") == 1


def test_count_parse_error(capsys):
    code, _, err = run(capsys, "count", "--mu", "2,3", "--m", "1")
    assert code == 2 and "non-increasing" in err


def test_count_methods_agree(capsys):
    for n in range(1, 9):
        for mu in generate_partitions(n):
            for m in range(1, min(mu[0], 4) + 1):
                values = set()
                for method in COUNT_METHODS:
                    code, out, _ = run(capsys, "count", "--mu", str(mu), "--m", str(m), "--method", method)
                    assert code == 0
                    values.add(json.loads(out)["value"])
                assert len(values) == 1, (mu, m, values)


def test_count_closed_without_formula(capsys):
    code, _, err = run(capsys, "count", "--mu", "5", "--m", "5", "--method", "closed")
    assert code == 2 and "no closed form" in err
    code, out, _ = run(capsys, "count", "--mu", "5", "--m", "5", "--method", "frobenius")
    assert code == 0 and json.loads(out)["value"] == "1"


@pytest.mark.parametrize("mu, weight, expected", [("3,2,1", "3,1^3", "2"), ("2,1", "2,1", "1"), ("1,1", "2", "0"), ("3,2", "2,2,1", "2")])
def test_kostka(capsys, mu, weight, expected):
    code, out, _ = run(capsys, "kostka", "--mu", mu, "--weight", weight)
    assert code == 0 and json.loads(out)["value"] == expected


def test_kostka_errors(capsys):
    assert run(capsys, "kostka", "--mu", "2,1", "--weight", "2")[0] == 2
    code, _, err = run(capsys, "kostka", "--mu", "5,5,5", "--weight", "2,2,2,2,2,2,2,1")
    assert code == 2 and "cap" in err
    code, out, _ = run(capsys, "kostka", "--mu", "5,5,5", "--weight", "2,2,2,2,2,2,2,1", "--enum-cap", "20")
    assert code == 0


@pytest.mark.parametrize("mu, cls, method, expected", [
    ("3,2,1", "3,1^3", "lassalle", "-2"),
    ("3,2,1", "3,1^3", "mn", "-2"),
    ("2,1", "2,1", "lassalle", "0"),
])
def test_character(capsys, mu, cls, method, expected):
    code, out, _ = run(capsys, "character", "--mu", mu, "--cycle-type", cls, "--method", method)
    assert code == 0 and json.loads(out)["value"] == expected


def test_character_errors(capsys):
    assert run(capsys, "character", "--mu", "3,2,1", "--cycle-type", "3,3", "--method", "lassalle")[0] == 2
    assert run(capsys, "character", "--mu", "3,2,1", "--cycle-type", "3,1", "--method", "mn")[0] == 2


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "--n", "4", "--m", "2")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "mu,f,f_skew_2" and len(lines) == 1 + partition_count(4)
    assert lines[1] == "4,1,1"


def test_table_n1_marks_zero(capsys):
    code, out, _ = run(capsys, "table", "--n", "1", "--m", "2", "--format", "json")
    assert code == 0 and json.loads(out) == {"mu": "1", "f": "1", "f_skew_2": "0"}


def test_table_n6(capsys):
    _, out, _ = run(capsys, "table", "--n", "6", "--m", "2,3,4")
    lines = out.splitlines()
    assert lines[0] == "mu,f,f_skew_2,f_skew_3,f_skew_4"
    assert len(lines) - 1 == 11
    assert '"3,2,1",16,8,2,0' in lines


@pytest.mark.parametrize("suite, max_n", [("arith", None), ("conjugate", 6), ("closed-forms", 9), ("characters", 8), ("prop1", 6)])
def test_verify(capsys, suite, max_n):
    argv = ["verify", suite] + ([] if max_n is None else ["--max-n", str(max_n)])
    code, out, _ = run(capsys, *argv)
    report = json.loads(out)
    assert code == 0 and report["passed"] and report["failures"] == []
    if suite == "closed-forms":
        assert report["cases_run"] >= 1000


def test_verify_reports_failure_with_exit_1(capsys, monkeypatch):
    import skewknuth.verify as verify

    monkeypatch.setattr(verify, "content_power_sum", lambda mu, l: -1)
    code, out, _ = run(capsys, "verify", "prop1", "--max-n", "3")
    report = json.loads(out)
    assert code == 1 and not report["passed"] and report["failures"][0]["rhs"] == "-1"


def test_usage_errors(capsys):
    assert run(capsys, "verify", "nope")[0] == 2
    assert run(capsys)[0] == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "skewknuth", "count", "--mu", "3,2,1", "--m", "3"],
        capture_output=True, text=True, check=True,
    )
    assert json.loads(proc.stdout)["value"] == "2"
