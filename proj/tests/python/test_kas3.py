from fractions import Fraction

import pytest

import kas3


def test_mtt_gadget_certifies():
    g = kas3.gadget("mtt", recertify=True)
    assert g["passed"] is True
    assert len(g["gadget"]["triangles"]) == 23


def test_dimers_222():
    d = kas3.dimers(2, 2, 2)
    assert d["count"] == 9
    assert d["agree"] is True
    assert d["direct"] == {4: 9}


def test_fold():
    assert kas3.fold("1 + x^6", 4) == {0: 1, 1: 1}
    with pytest.raises(kas3.PreconditionError):
        kas3.fold("x^2 + x^5", 4)


def test_permanent3_all_ones():
    ones = {"dims": [2, 2, 2], "entries": [[i, j, k, 1] for i in range(2) for j in range(2) for k in range(2)]}
    assert kas3.permanent3(ones) == 4


def test_kasteleyn_build_certifies():
    out = kas3.kasteleyn_build({"n": 2, "rows": [[1, 1], [1, 1]]}, certify=True)
    assert out["m"] == 8
    c = out["certification"]
    assert c["per2"] == 2 and c["per3"] == 2 and c["det3"] == 2
    assert c["trivial_signing"]["passed"] is True
    signed = kas3.sign_k1(out["tensor"])
    assert signed["certified"] is True


def test_binet_cauchy():
    for case in kas3.binet_cauchy_check(2, 4, seed=3, trials=5):
        assert case["lhs"] == case["rhs"]


def test_decode_value():
    assert kas3.decode_value("-3/4") == Fraction(-3, 4)
    assert kas3.decode_value("123456789012345678901234567890") == 123456789012345678901234567890


def test_errors():
    assert issubclass(kas3.SchemaError, kas3.Error)
    with pytest.raises(kas3.SchemaError):
        kas3.permanent3("{not json")
    with pytest.raises(kas3.PreconditionError):
        kas3.gadget("cube")
    with pytest.raises(kas3.GuardExceeded):
        kas3.dimers(4, 3, 3)
