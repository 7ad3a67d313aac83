from fractions import Fraction

import pytest

import ffsqfree


def frac(r):
    return Fraction(int(r["num"]), int(r["den"]))


def test_density_of_x():
    rep = ffsqfree.density(3, "x", 2)
    assert rep["total"] == 9
    assert frac(rep["density"]) == Fraction(2, 3)
    assert rep["bound_check"] is True


def test_sample_is_reproducible():
    a = ffsqfree.density(101, "x^4 + 2", 3, mode="sample", samples=5000, seed=7)
    b = ffsqfree.density(101, "x^4 + 2", 3, mode="sample", samples=5000, seed=7, threads=1)
    assert a == b
    assert frac(a["density"]) > Fraction(9, 10)


def test_certify():
    cert = ffsqfree.certify(3, "x", 2, verify=True)
    assert cert["product_degree"] == 2
    assert cert["bound"] == 4
    assert cert["equivalence"]["agreement"]
    assert cert["disc_part"] == [
        {"exponents": [0, 2], "coeff": "1"},
        {"exponents": [1, 0], "coeff": "2"},
    ]


def test_ramsay_counterexample():
    rep = ffsqfree.ramsay(2, "@counterexample", 1, [1, 2, 3])
    assert frac(rep["c_f_truncated"]) == 0
    assert all(frac(e["density"]) == 0 for e in rep["empirical"])


def test_helpers():
    assert ffsqfree.canonical(5, "(x - t)*(x + t)") == "x^2 + 4*t^2"
    assert ffsqfree.is_squarefree(3, "t^2 + 1")
    assert not ffsqfree.is_squarefree(3, "(t + 1)^2")
    assert ffsqfree.disc_x(7, "x^2 + t*x + t^3") == "3*t^3 + t^2"


def test_errors_carry_kind():
    with pytest.raises(ffsqfree.FFSqfreeError) as info:
        ffsqfree.certify(5, "t^2*x", 2)
    assert info.value.kind == "ContentNotSquarefree"
    with pytest.raises(ValueError):
        ffsqfree.density(4, "x", 2)
