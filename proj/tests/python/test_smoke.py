import pytest

import motivic


def test_class_arithmetic():
    L = motivic.GClass("L")
    x = (L - 1) * (L + 1)
    assert x == motivic.GClass("L^2 - 1")
    assert motivic.GClass("L^-2 - L^-5").specialize(2) == "7/32"
    assert x.euler_char() == "0"
    assert motivic.GClass(3).virtual_dim() == 0


def test_power_structure():
    # (1 + t)^L = (1 - L t^2) / (1 - L t)
    coeffs = motivic.power_coefficients("1+t", "L", 4)
    assert motivic.GClass(coeffs[1]) == motivic.GClass("L")
    assert motivic.GClass(coeffs[2]) == motivic.GClass("L^2 - L")
    assert [motivic.moebius(n) for n in range(1, 7)] == [1, -1, -1, 0, -1, 1]


def test_curves():
    inv = motivic.invariants(("t^2", "t^3"))
    assert inv["delta"] == 1
    assert inv["mu"] == 2
    assert inv["R"] == "L^-3"
    node = motivic.invariants(("t", "0"), ("0", "t"))
    assert node["mu"] == 1
    assert motivic.mult_sequence("t^3", "t^7") == [3, 3]
    assert not motivic.is_degenerate("t^2", "t^3")


def test_lifting():
    r = motivic.lift("y - x^2", "t", "t^2+t^5", 20)
    assert r["quadratic"] and r["jet_preserved"]
    assert r["lifted_text"][1].startswith("t^2")
    with pytest.raises(motivic.MotivicError):
        motivic.lift("y^2 - x^3", "t^2", "t^3+t^9", 30)


def test_strata_and_examples():
    assert motivic.kouchnirenko_count(3, 7) == 1
    assert all(c["pass"] for c in motivic.example3_checks(3, 7))
    assert all(c["pass"] for c in motivic.example2_sum_checks())
    spec = '{"ambient": "function", "n": 2, "zero": ["a1_0", "a0_1"], "blocks": [{"kind": "squarefree_form", "degree": 2}]}'
    assert motivic.measure_stratum(spec) == motivic.GClass("L^-2 - L^-3")


def test_generating_series():
    res = open(__file__.replace("tests/python/test_smoke.py", "data/cusp_resolution.json")).read()
    text = motivic.pgen(res, 4)
    assert "L^-2*t^3" in text


def test_errors():
    with pytest.raises(motivic.MotivicError):
        motivic.kouchnirenko_count(2, 4)
    with pytest.raises(motivic.MotivicError):
        motivic.GClass("L +")


def test_verify():
    report = motivic.verify("kouchnirenko")
    assert report and all(c["pass"] for c in report)
