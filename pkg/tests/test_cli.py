import csv
import io
import json

import pytest

from schroeder_subtrees.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_series_golden():
    code, out, _ = call("series", "--family", "schroeder", "--kind", "trees", "--order", "6", "--format", "json")
    assert code == 0
    assert out == '{"family":"schroeder","kind":"trees","order":6,"coefficients":["0","1","1","3","11","45","197"]}\n'


def test_series_with_k_and_csv():
    code, out, _ = call("series", "--family", "motzkin", "--kind", "subtree", "--k", "1", "--order", "3", "--format", "csv")
    assert code == 0
    assert out == "n,coefficient\n0,0\n1,1\n2,1\n3,3\n"


def test_series_needs_k():
    code, _, err = call("series", "--kind", "subtree")
    assert code == 2
    assert "--k" in err


def test_large_integers_are_plain_strings():
    _, out, _ = call("series", "--kind", "vertices", "--order", "300")
    coeffs = json.loads(out)["coefficients"]
    assert all(c.isdigit() for c in coeffs)
    assert len(coeffs[-1]) > 200


def test_rk_rows():
    code, out, _ = call("rk", "--k-max", "7")
    rows = json.loads(out)["rows"]
    assert [r["polynomial"] for r in rows] == ["x", "0", "x^2", "x^3", "2x^3+x^4", "5x^4+x^5", "5x^4+9x^5+x^6"]
    code, out, _ = call("rk", "--k", "5")
    assert json.loads(out) == {"k": 5, "polynomial": "2x^3+x^4", "coefficients": ["0", "0", "0", "2", "1"]}


def test_table_limit():
    code, out, _ = call("table", "subtree", "--k-max", "7", "--limit")
    assert code == 0
    rows = json.loads(out)["rows"]
    assert len(rows) == 7
    assert rows[0] == {
        "k": 1,
        "root_gf": "x",
        "rational_part": "2",
        "sqrt2_coefficient": "-1",
        "decimal": "0.585786437627",
    }


def test_table_at_n():
    _, out, _ = call("table", "subtree", "--at-n", "3", "--k-max", "5")
    rows = json.loads(out)["rows"]
    assert rows[0]["exact"] == "9/14"
    assert rows[2]["exact"] == "1/7"


def test_table_balanced_csv():
    _, out, _ = call("table", "balanced", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["k"] for r in rows] == ["0", "1", "2", "3"]
    assert rows[3]["root_gf"] == "(x^8)/(1-4x+4x^2+2x^3-5x^4+2x^5+x^6-x^7)"


def test_verify_passes():
    code, out, _ = call("verify", "--family", "schroeder", "--n-max", "6")
    data = json.loads(out)
    assert code == 0 and data["ok"]
    names = " ".join(c["name"] for c in data["checks"])
    for needle in ("enumeration", "census", "2S^2", "A (2", "V - xy", "R_k"):
        assert needle in names


def test_verify_reports_failure(monkeypatch):
    from schroeder_subtrees import cli, verify

    monkeypatch.setattr(cli, "run_checks", lambda family, n_max: [verify.Check("broken", False, "x")])
    code, out, _ = call("verify")
    assert code == 1
    assert json.loads(out)["ok"] is False


def test_sample_is_deterministic():
    a = call("sample", "--leaves", "9", "--count", "5", "--seed", "3")
    b = call("sample", "--leaves", "9", "--count", "5", "--seed", "3")
    assert a == b
    assert len(json.loads(a[1])["trees"]) == 5
    _, out, _ = call("sample", "--leaves", "4", "--count", "3")
    assert json.loads(out)["trees"] == ["((()())()())", "((()())()())", "((()()())())"]


def test_sample_statistic():
    _, out, _ = call("sample", "--leaves", "6", "--count", "200", "--seed", "1", "--stat", "leaf")
    data = json.loads(out)
    assert list(data) == ["leaves", "trials", "seed", "statistic", "hits", "vertices", "estimate", "stderr"]


def test_convergence_csv():
    _, out, _ = call("convergence", "--stat", "subtree:3", "--n-list", "50,100", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["n"] for r in rows] == ["50", "100"]
    assert rows[0]["limit"] == "0.100505063388"
    assert float(rows[0]["abs_error"]) > float(rows[1]["abs_error"])


def test_asym():
    _, out, _ = call("asym", "--which", "trees", "--n", "100")
    data = json.loads(out)
    assert abs(float(data["ratio"]) - 1) < 0.05
    assert data["exact"].isdigit()


def test_discrepancy_json_shape():
    _, out, _ = call("discrepancy", "--table", "leaf")
    row = json.loads(out)["rows"][0]
    assert list(row)[:4] == ["k", "computed", "paper", "ratio_decimal"]
    assert row["ratio_decimal"] == "2.000000"


def test_census_dump():
    code, out, _ = call("census", "--family", "schroeder", "--n", "2")
    assert out == "family,n,statistic,k,count\nschroeder,1,subtree,1,1\nschroeder,2,subtree,1,2\nschroeder,2,subtree,3,1\n"


def test_census_cap_is_usage_error():
    code, _, err = call("census", "--n", "11")
    assert code == 2
    assert "cap" in err


def test_tightness():
    _, out, _ = call("tightness", "--family", "schroeder", "--k-max", "3")
    data = json.loads(out)
    assert data["certificate"]["equals_S_at_rho"] is True
    assert data["rows"][1]["probability"] == "0.000000000000"


@pytest.mark.parametrize("argv", [["bogus"], ["series", "--nope"], ["table"], []])
def test_usage_errors(argv, capsys):
    code, _, _ = call(*argv)
    assert code == 2
    assert "usage" in capsys.readouterr().err
