"""Smoke tests for the pybind11 module (and the CLI, when CFUB_CLI is set)."""

import os
import subprocess
from fractions import Fraction

import _cfub as cfub


def frac(s):
    return Fraction(s)


def test_numbers():
    assert cfub.c_number(0) == "1"
    assert cfub.c_number(2) == "2"
    assert cfub.c_number(8) == "50906"
    assert frac(cfub.c_number(5)) == Fraction(2161, 16)


def test_poly_coefficients():
    assert cfub.c_poly(4) == ["0", "0", "2", "0", "24"]
    assert [frac(c) for c in cfub.c_poly(3)] == [0, Fraction(1, 4), 0, 6]


def test_routes_agree():
    for route in ["definition", "binomial", "odd_step", "stirling",
                  "second_order", "determinant", "egf"]:
        assert cfub.c_poly(6, route) == ["0", "0", "2", "0", "120", "0", "720"]


def test_plain_rendering():
    assert cfub.c_poly_plain(4) == "2 x^2+24 x^4"
    assert cfub.c_poly_plain(3, "egf", True) == "x+24 x^3"


def test_tables():
    t = cfub.central_t_table(6)
    assert t[4][2] == "1"
    assert t[6][4] == "5"
    assert t[3][1] == "1/4"
    s = cfub.stirling2_table(4)
    assert s[4][2] == "7"


def test_delta_zero_power():
    assert cfub.delta_zero_power(2) == "0"
    assert cfub.delta_zero_power(3) == "1/4"


def test_integral_representation():
    exact = 2 * 0.5**2
    assert abs(cfub.integral_representation(2, 0.5) - exact) < 1e-8


def test_asymptotic():
    (report,) = cfub.asymptotic([10])
    assert report["exact"] == "4946282"
    assert abs(report["ratio"] - 1.0) < 0.01


def test_verify_clean():
    reports = cfub.verify(6)
    assert all(r["status"] in ("pass", "measured") for r in reports)


def test_cli_roundtrip():
    cli = os.environ.get("CFUB_CLI")
    if not cli:
        return
    out = subprocess.run([cli, "poly", "--n", "4"], capture_output=True, text=True)
    assert out.returncode == 0
    assert out.stdout.strip() == "2 x^2+24 x^4"
    bad = subprocess.run([cli, "poly", "--n", "4", "--route", "bogus"],
                         capture_output=True, text=True)
    assert bad.returncode == 2
