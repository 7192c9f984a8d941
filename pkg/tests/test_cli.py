import io
import json
import subprocess
import sys

import pytest

from qmock import builders as b
from qmock.bivariate import ZQSeries
from qmock.catalog import DEFAULT_CATALOG, VerifyReport
from qmock.series import QSeries
from qmock.cli import main


def run(argv, catalog=None):
    out = io.StringIO()
    code = main(argv, catalog=catalog, out=out)
    return code, out.getvalue()


def pairs(text):
    return [tuple(int(x) for x in line.split()) for line in text.splitlines()]


def test_verify_single_passes():
    code, out = run(["verify", "thm1-nu", "--q-order", "60", "--z-order", "30"])
    assert code == 0
    assert out.startswith("PASS thm1-nu")


def test_verify_all_json():
    code, out = run(["verify", "--all", "--q-order", "200", "--z-order", "40", "--json"])
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == len(DEFAULT_CATALOG.ids())
    for line in lines:
        r = VerifyReport.from_json(line)
        assert r.passed
        assert r.to_json() == line
    assert [json.loads(x)["identity"] for x in lines] == DEFAULT_CATALOG.ids()


def test_verify_unknown_id_is_usage_error(capsys):
    code, _ = run(["verify", "no-such-id"])
    assert code == 2
    assert "no-such-id" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [
    ["verify"],
    ["verify", "--all", "thm1-nu"],
    ["verify", "thm1-nu", "--q-order", "0"],
    ["verify", "thm1-nu", "--q-order", "abc"],
    ["verify", "thm1-nu", "--json", "--csv"],
    ["coeffs", "q-omega"],
    ["coeffs", "nope", "--q-order", "3"],
    ["coeffs", "q-omega", "--q-order", "3", "--z-degree", "1"],
    ["table", "psigma", "--max", "3"],
    ["table", "pomega", "--max", "-1"],
    ["frobnicate"],
])
def test_usage_errors_exit_2(argv, capsys):
    assert run(argv)[0] == 2


def test_injected_fault_exits_1():
    def bumped(z_order, q_order, **kw):
        return b.build_thm1_omega_rhs(z_order, q_order, **kw) + ZQSeries.from_terms({(1, 5): 1}, z_order, q_order)
    faulty = DEFAULT_CATALOG.with_builder("thm1-omega-rhs", bumped)
    code, out = run(["verify", "thm1-omega", "--q-order", "60", "--z-order", "30", "--json"], catalog=faulty)
    assert code == 1
    fm = json.loads(out)["first_mismatch"]
    assert (fm["z_degree"], fm["q_exponent"]) == (1, 5)
    code, out = run(["verify", "thm1-omega", "--q-order", "20", "--z-order", "10", "--csv"], catalog=faulty)
    assert code == 1
    header, row = out.splitlines()
    assert header.split(",")[:2] == ["identity", "status"]
    assert row.split(",")[1] == "fail"


def test_coeffs_examples():
    code, out = run(["coeffs", "pnt-omega-rhs", "--q-order", "50"])
    assert code == 0
    assert pairs(out) == [(1, 1), (3, 1), (11, -1), (17, -1), (33, 1), (43, 1)]
    # p_omega(1..6) = 1, 2, 3, 4, 6, 8
    assert pairs(run(["coeffs", "q-omega", "--q-order", "6"])[1]) == [
        (1, 1), (2, 2), (3, 3), (4, 4), (5, 6), (6, 8)]
    assert run(["coeffs", "q-omega", "--q-order", "0"]) == (0, "")


def test_coeffs_bivariate():
    code, out = run(["coeffs", "thm1-omega-lhs", "--q-order", "5", "--z-degree", "1"])
    assert code == 0
    assert pairs(out) == [(e, c) for e, c in b.build_thm1_omega_lhs(1, 5).row(1).nonzero()]
    code, out = run(["coeffs", "thm1-omega-lhs", "--q-order", "3"])
    assert pairs(out) == [(0, 1, 1), (0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, 1), (2, 3, 1)]


def test_coeffs_are_decimal_strings_for_big_values():
    big = DEFAULT_CATALOG.with_builder("omega", lambda q_order, **kw: QSeries([0, 3 ** 50, -(7 ** 40)]))
    code, out = run(["coeffs", "omega", "--q-order", "2"], catalog=big)
    assert code == 0
    assert out.splitlines() == [f"1 {3 ** 50}", f"2 {-(7 ** 40)}"]


def test_table_examples():
    code, out = run(["table", "pomega", "--max", "5"])
    assert code == 0
    rows = [line.split() for line in out.splitlines()]
    assert [(int(n), int(c)) for n, c, _, _ in rows] == [(1, 1), (2, 2), (3, 3), (4, 4), (5, 6)]
    assert all(r[3] == "OK" for r in rows)
    code, out = run(["table", "pnu", "--max", "3", "--csv"])
    assert out.splitlines() == ["n,count,series_coeff,agree", "0,1,1,true", "1,1,1,true",
                                "2,2,2,true", "3,2,2,true"]
    assert run(["table", "pomega", "--max", "0"]) == (0, "")


def test_list_ids():
    code, out = run(["verify", "--list"])
    assert code == 0
    assert [line.split("\t")[0] for line in out.splitlines()] == DEFAULT_CATALOG.ids()


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "qmock", "table", "pnu", "--max", "2"],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout.splitlines()[-1] == "2 2 2 OK"
    res = subprocess.run([sys.executable, "-m", "qmock", "verify", "nope"], capture_output=True, text=True)
    assert res.returncode == 2
