import csv
import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from eulerleg.cli import CSV_FIELDS, METHODS, MethodReport, main

from oracles import TABLE1


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def usage_code(*argv):
    with pytest.raises(SystemExit) as exc:
        main(list(argv), io.StringIO())
    return exc.value.code


def test_table_text():
    code, text = run("table", "--max-n", "1")
    assert code == 0
    assert [ln.split(None, 1)[1] for ln in text.splitlines()] == ["1", "t"]
    code, text = run("table", "--max-n", "0")
    assert text.split() == ["0", "1"]
    _, text = run("table", "--max-n", "4")
    assert text.splitlines()[4].endswith("(35t^4 - 30t^2 + 3)/8")


def test_table_json_matches_table1():
    code, text = run("table", "--max-n", "7", "--format", "json")
    rows = json.loads(text)["rows"]
    for row in rows:
        assert tuple(Fraction(c) for c in row["coefficients"]) == TABLE1[row["n"]]


def test_table_csv():
    _, text = run("table", "--max-n", "3", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(text)))
    assert rows[3]["coefficients"] == "0 -3/2 0 5/2"


def test_table_out_of_range():
    assert usage_code("table", "--max-n", "51") == 2
    assert usage_code("table", "--max-n", "-1") == 2


def test_eval_all_methods():
    code, text = run("eval", "--n", "5", "--t", "3/2", "--format", "json")
    assert code == 0
    doc = json.loads(text)
    assert [r["method"] for r in doc["reports"]] == list(METHODS)
    for r in doc["reports"]:
        assert abs(float(r["value"]) - 8469 / 256) < 1e-9
        if r["method"] in ("recurrence", "trinomial", "gf-series", "primitive-solve"):
            assert r["est_error"] == "exact"
        else:
            assert 0 <= float(r["est_error"]) < 1e-9
    assert float(doc["comparison"]["max_pairwise_deviation"]) < 1e-9


def test_eval_constant():
    code, text = run("eval", "--n", "0", "--t", "0.3", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(text)))
    assert tuple(rows[0].keys()) == CSV_FIELDS
    for r in rows:
        if r["method"] == "e606":
            assert r["value"].startswith("skipped")
        else:
            assert float(r["value"]) == pytest.approx(1.0, abs=1e-12)


def test_eval_skips_e606():
    code, text = run("eval", "--n", "4", "--t", "0.5", "--methods", "recurrence,e606,laplace-neg")
    assert code == 0
    assert "skipped: requires t > 1" in text


def test_eval_seventeen_digits():
    _, text = run("eval", "--n", "3", "--t", "1/3", "--methods", "recurrence", "--format", "json")
    value = json.loads(text)["reports"][0]["value"]
    assert value == format(float(Fraction(-7, 27) - 0), ".17g") or float(value) == pytest.approx(-0.4074074074074074)


def test_eval_bad_input():
    assert usage_code("eval", "--n", "2", "--t", "abc") == 2
    assert usage_code("eval", "--n", "2", "--t", "1", "--methods", "bogus") == 2
    assert usage_code("eval", "--n", "2") == 2


def test_method_report_round_trip():
    _, text = run("eval", "--n", "6", "--t", "1.2", "--format", "json")
    for d in json.loads(text)["reports"]:
        r = MethodReport.from_dict(json.loads(json.dumps(d)))
        assert r.to_dict() == d
        assert set(d) == set(CSV_FIELDS)


@pytest.mark.parametrize("suite", ["recurrence", "jacobi", "a-family", "e606", "euler-transform", "section22"])
def test_verify_suites(suite):
    code, text = run("verify", "--suite", suite, "--format", "json")
    doc = json.loads(text)
    assert code == 0 and doc["passed"] and doc["failed"] == 0 and doc["total"] > 0


def test_verify_failure_exit_code():
    # an impossible tolerance makes the numeric suites fail
    code, text = run("verify", "--suite", "jacobi", "--tol", "1e-20")
    assert code == 1
    assert "failing tuple" in text


def test_verify_output_sorted():
    _, text = run("verify", "--suite", "section22", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(text)))
    names = [r["check"] for r in rows]
    assert names == sorted(names)


def test_ortho():
    code, text = run("ortho", "--max-n", "1", "--nodes", "8", "--format", "json")
    g = [[float(x) for x in row] for row in json.loads(text)["gram"]]
    assert code == 0
    assert g[0][0] == pytest.approx(2) and g[1][1] == pytest.approx(2 / 3)
    assert abs(g[0][1]) < 1e-15
    code, text = run("ortho", "--max-n", "0", "--nodes", "1", "--format", "json")
    assert code == 0 and float(json.loads(text)["gram"][0][0]) == pytest.approx(2)
    code, _ = run("ortho", "--max-n", "8", "--nodes", "64")
    assert code == 0


def test_ortho_too_few_nodes():
    assert usage_code("ortho", "--max-n", "8", "--nodes", "8") == 2


def test_ortho_minimum_nodes_is_exact():
    # nodes = max-n + 1 integrates degree 2 max-n + 1, enough for every P_i P_j
    code, _ = run("ortho", "--max-n", "12", "--nodes", "13")
    assert code == 0


def test_ortho_unreachable_tolerance_exits_one():
    code, _ = run("ortho", "--max-n", "20", "--nodes", "64", "--tol", "1e-300")
    assert code == 1


def test_gf():
    code, text = run("gf", "--t", "2", "--count", "3", "--format", "json")
    assert code == 0
    assert [r["gf"] for r in json.loads(text)["rows"]] == ["1", "2", "11/2"]
    _, text = run("gf", "--t", "1", "--count", "5", "--format", "json")
    assert [r["gf"] for r in json.loads(text)["rows"]] == ["1"] * 5
    _, text = run("gf", "--t", "0", "--count", "4", "--format", "csv")
    assert [r["gf"] for r in csv.DictReader(io.StringIO(text))] == ["1", "0", "-1/2", "0"]
    assert usage_code("gf", "--t", "1", "--count", "201") == 2


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "eulerleg.cli", "table", "--max-n", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[-1].strip().endswith("(3t^2 - 1)/2")
