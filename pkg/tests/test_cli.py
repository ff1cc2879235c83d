import io
import json
import subprocess
import sys
from fractions import Fraction as F

import pytest

from qhs.cli import EXIT_CAP, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, main, parse_range
from qhs.cyclotomic import get_field


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


def test_compute_rational_results():
    assert run("compute", "--n", "5", "--indices", "2") == (EXIT_OK, "0\n")
    assert run("compute", "--n", "4", "--indices", "1,1") == (EXIT_OK, "1\n")
    assert run("compute", "--n", "4", "--indices", "1", "--method", "brute") == (EXIT_OK, "3/2\n")


def test_compute_field_element_output():
    code, text = run("compute", "--n", "3", "--indices", "2,6")
    assert code == EXIT_OK
    assert text.startswith("coeffs")
    code, a = run("compute", "--n", "3", "--indices", "2,6", "--format", "json")
    _, b = run("compute", "--n", "3", "--indices", "6,2", "--format", "json")
    K = get_field(3)
    za = K.from_coeffs([F(x) for x in json.loads(a)["value"]["coeffs"]])
    zb = K.from_coeffs([F(x) for x in json.loads(b)["value"]["coeffs"]])
    assert za + zb == F(-1, 81)
    assert not json.loads(a)["rational"]


def test_compute_rational_q():
    code, text = run("compute", "--q", "1/2", "--upper", "3", "--indices", "1")
    # 1/(1 - 1/2) + 1/(1 - 1/4)
    assert (code, text) == (EXIT_OK, "10/3\n")


@pytest.mark.parametrize("argv", [
    ("compute", "--n", "1", "--indices", "1"),
    ("compute", "--n", "5", "--indices", "1,0"),
    ("compute", "--n", "5", "--indices", "a"),
    ("compute", "--q", "1/2", "--indices", "1"),
    ("compute", "--q", "1", "--upper", "3", "--indices", "1"),
    ("compute", "--indices", "1"),
    ("verify", "--suite", "nope"),
    ("verify", "--suite", "table", "--max-n", "1"),
    ("table", "--what", "F", "--n", "5..2"),
    ("frobnicate",),
])
def test_usage_errors(argv, capsys):
    assert run(*argv)[0] == EXIT_USAGE


def test_brute_force_cap():
    code, _ = run("compute", "--n", "30", "--indices", "1,1,1,1,1,1,1", "--method", "brute", "--cap", "1000")
    assert code == EXIT_CAP


def test_verify_table_grid():
    code, text = run("verify", "--suite", "table", "--max-n", "20", "--format", "json")
    assert code == EXIT_OK
    rep = json.loads(text)
    assert rep["summary"] == {"pass": 152, "fail": 0, "expected_mismatch": 0}
    assert set(rep) == {"suite", "grid", "cases", "summary", "duration_ms", "version"}
    for c in rep["cases"]:
        assert c["verdict"] == "pass"
        assert isinstance(c["lhs"], str)


def test_verify_catalog_expected_mismatches():
    code, text = run("verify", "--suite", "catalog", "--max-n", "8", "--max-m", "3", "--format", "json")
    assert code == EXIT_OK
    rep = json.loads(text)
    rows = [c for c in rep["cases"] if c["verdict"] == "expected-mismatch"]
    assert rows and rep["summary"]["fail"] == 0
    assert {c["check"] for c in rows} == {"R6", "mixed-m2-A6", "ones-A3-step1"}
    three = next(c for c in rows if c["check"] == "mixed-m2-A6" and c["params"] == {"n": 3})
    assert (three["lhs"], three["rhs"]) == ("1/81", "-1/81")


def test_verify_all_tiny():
    assert run("verify", "--suite", "all", "--max-n", "2")[0] == EXIT_OK


def test_json_round_trip_is_byte_identical(tmp_path):
    out = tmp_path / "r.json"
    assert run("verify", "--suite", "theorem4", "--max-n", "6", "--format", "json", "--out", str(out))[0] == 0
    text = out.read_text()
    assert json.dumps(json.loads(text), sort_keys=True, indent=2) + "\n" == text


def _body(text):
    d = json.loads(text)
    d.pop("duration_ms")
    return d


def test_jobs_do_not_change_report(monkeypatch):
    args = ("verify", "--suite", "all", "--max-n", "6", "--max-m", "3", "--format", "json")
    one = _body(run(*args, "--jobs", "1")[1])
    three = _body(run(*args, "--jobs", "3")[1])
    monkeypatch.setenv("QHS_JOBS", "2")
    env = _body(run(*args)[1])
    assert one == three == env


def test_csv_and_text_formats():
    code, csv_text = run("verify", "--suite", "bik", "--max-n", "5", "--max-m", "2", "--format", "csv")
    assert code == 0
    lines = csv_text.splitlines()
    assert lines[0] == "suite,check,params,lhs,rhs,verdict"
    assert len(lines) == 1 + 4 * 3
    code, text = run("verify", "--suite", "bik", "--max-n", "5", "--max-m", "2")
    assert "pass=12 fail=0" in text


def test_mismatch_exit_code(monkeypatch):
    import qhs.closed_forms as cf
    monkeypatch.setattr(cf, "bik_pair_formula", lambda n, m: 0)
    assert run("verify", "--suite", "bik", "--max-n", "6", "--max-m", "2")[0] == EXIT_MISMATCH


def test_table_zeta_single():
    code, text = run("table", "--what", "zeta-single", "--n", "2..10", "--s", "1..4", "--format", "json")
    assert code == 0
    rows = json.loads(text)["rows"]
    assert sum(len(r) - 1 for r in rows) == 36
    n5 = next(r for r in rows if r[0] == "5")
    assert n5[2] == "0"


def test_table_F_and_R():
    from qhs.closed_forms import theorem1_formula
    from qhs.exact import format_rational
    _, text = run("table", "--what", "F", "--n", "6", "--A", "3", "--m", "1..3", "--format", "csv")
    row = text.splitlines()[1].split(",")
    assert row[2:] == [format_rational(theorem1_formula(6, 3, m)) for m in (1, 2, 3)]
    _, text = run("table", "--what", "R", "--n", "4", "--A", "1", "--m", "1..2", "--format", "csv")
    assert text.splitlines()[1].split(",")[2] == "3/2"


def test_parse_range():
    assert parse_range("3") == range(3, 4)
    assert parse_range("2..5") == range(2, 6)


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "qhs", "compute", "--n", "4", "--indices", "1"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout == "3/2\n"
