import io
import json
import subprocess
import sys
from fractions import Fraction

import mpmath
import pytest

from polydomain import cli
from polydomain.ncalg import stuffle
from polydomain.parsing import parse_expression


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["product", "y1", "y2", "--op", "stuffle"], "y1 y2 + y2 y1 + y3"),
        (["product", "x1", "x0 x1", "--op", "shuffle"], "2*x0 x1 x1 + x1 x0 x1"),
        (["product", "y1", "y2", "--op", "conc"], "y1 y2"),
        (["hsum", "y2 y1", "--upper", "4"], "17/32"),
        (["li", "x0 x1", "--order", "4"], "z + 1/4*z^2 + 1/9*z^3 + 1/16*z^4 + O(z^5)"),
        (["star", "y2", "--trunc", "4"], "1 + y2 + y2 y2 + O(w>4)"),
        (["regularize", "y1 y1"], "1/2*g^2 - 1/2*y2"),
        (["preimage", "0,1", "--trunc", "3"], "x1 - x1 x1 + x1 x1 x1 + O(w>3)"),
        (["stirling", "4", "2"], "7"),
    ],
)
def test_golden_text(argv, expected):
    code, out, _ = call(*argv)
    assert code == 0
    assert out.strip() == expected


def test_printed_product_parses_back():
    code, out, _ = call("product", "y2 y1", "y1 y3")
    assert code == 0
    assert parse_expression(out.strip()) == stuffle(parse_expression("y2 y1"), parse_expression("y1 y3"))


def test_json_exact_record():
    code, out, _ = call("hsum", "y2 y1", "--upper", "4", "--format", "json")
    rec = json.loads(out)
    assert code == 0
    assert rec["operation"] == "hsum"
    assert Fraction(rec["value"]) == Fraction(17, 32)


def test_json_numeric_record():
    code, out, _ = call("mzv", "y3 y1", "--format", "json")
    rec = json.loads(out)
    assert code == 0
    assert set(rec) == {"operation", "inputs", "value", "error_bound", "precision_digits"}
    mpmath.mp.dps = 30
    assert abs(mpmath.mpf(rec["value"]["re"]) - mpmath.pi**4 / 360) <= rec["error_bound"]
    assert rec["precision_digits"] == 50


def test_csv_tables():
    code, out, _ = call("hsum", "y1", "--upper", "3", "--format", "csv")
    assert code == 0
    assert out == "N,value\n0,0\n1,1\n2,3/2\n3,11/6\n"
    code, out, _ = call("li", "x0 x1", "--order", "3", "--over-1mz", "--format", "csv")
    assert out.splitlines() == ["order,coefficient", "0,0", "1,1", "2,5/4", "3,49/36"]


def test_prec_flag_controls_digits():
    code, out, _ = call("zeta", "3", "--prec", "20", "--format", "json")
    rec = json.loads(out)
    assert rec["precision_digits"] == 20
    assert abs(float(rec["value"]["re"]) - 1.2020569031595942) < 1e-15


def test_zeros_listing():
    code, out, _ = call("zeros", "2", "--bound", "2.5", "--format", "json")
    assert code == 0
    zs = {complex(float(z["re"]), float(z["im"])) for z in json.loads(out)["value"]}
    assert zs == {1j, -1j, 2j, -2j}


def test_reflection_ok():
    code, out, _ = call("reflection", "1", "0.5")
    assert code == 0
    assert "|lhs - rhs|" in out


@pytest.mark.parametrize(
    "argv, code",
    [
        (["hsum", "y0", "--upper", "3"], 2),
        (["product", "y1 +", "y2"], 2),
        (["frob"], 2),
        (["hsum", "y1"], 2),
        (["mzv", "y1 y2"], 3),
        (["reflection", "1", "1j"], 3),
        (["stirling", "4", "2", "--format", "csv"], 3),
        (["li", "x1 x0", "--order", "3"], 3),
        (["zeta", "3", "--prec", "10"], 4),
    ],
)
def test_exit_codes(argv, code):
    got, out, err = call(*argv)
    assert got == code
    assert (out + err).strip()


def test_verify_suite_passes():
    code, out, _ = call("verify", "zeta-31")
    assert code == 0
    assert "zeta-31: PASS" in out


def test_verify_unknown_suite():
    code, _, err = call("verify", "nope")
    assert code == 2
    assert "zeta-31" in err


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "polydomain", "stirling", "5", "3"], capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout.strip() == "25"
