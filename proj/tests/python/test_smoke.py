from fractions import Fraction

import pytest

import flatcert

MAXIMIZER = [("1/3", "5/3"), ("-4/3", "-5/3"), (2, 0)]
CROSS = [(1, 0), (0, 1), (-1, 0), (0, -1)]


def test_width():
    w, u = flatcert.lattice_width(MAXIMIZER)
    assert w == Fraction(10, 3)
    assert u == (1, 0)
    assert flatcert.lattice_width(CROSS)[0] == 2


def test_ratdiam():
    length, _ = flatcert.rational_diameter([(1, 0), (0, 1), (-1, -1)])
    assert length == Fraction(3, 2)


def test_freeness():
    assert flatcert.is_free(MAXIMIZER, "z")["free"]
    assert flatcert.is_free(CROSS, "r")["free"]
    square = [(0, 0), (3, 0), (3, 3), (0, 3)]
    v = flatcert.is_free(square, "z")
    assert not v["free"]
    assert flatcert.verify(square, v, kind="free")


def test_maximality_round_trip():
    rep = flatcert.maximality(MAXIMIZER, "z")
    assert rep["overall"] == "Maximal"
    assert flatcert.verify(MAXIMIZER, rep)
    rep = flatcert.maximality(CROSS, "r")
    assert rep["overall"] == "Maximal"
    assert flatcert.verify(CROSS, rep)
    rep["overall"] = "NotMaximal"
    assert not flatcert.verify(CROSS, rep)


def test_flt1():
    assert flatcert.flt1(0, 0) == 1
    assert flatcert.flt1(0, 1) == 2
    assert flatcert.flt1(0, "4/3") == 2


def test_certify():
    c = flatcert.certify_case("case1", "10/3")
    assert c["status"] == "Certified" and c["replayed"]
    c = flatcert.certify_case("case1", Fraction(33, 10))
    assert c["status"] == "Counterexample"
    assert Fraction(c["value"]) == Fraction(10, 3)


def test_bad_input():
    with pytest.raises(ValueError):
        flatcert.lattice_width([("x", 0)])
    with pytest.raises(ValueError):
        flatcert.is_free(CROSS, "q")
