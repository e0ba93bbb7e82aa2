import pytest

import beauville


def test_verify_smallest_case():
    cert = beauville.verify(3, 1)
    assert cert["group_order"] == 243
    assert cert["group_order"] == beauville.nottingham_order(3, 6)
    assert all(c["pass"] for c in cert["checks"])
    assert cert["version"] == beauville.__version__
    assert all(r["pass"] for r in beauville.recheck(cert))


def test_verify_errors():
    with pytest.raises(beauville.DomainError):
        beauville.verify(4, 1)
    with pytest.raises(beauville.LimitExceeded):
        beauville.verify(3, 9)
    with pytest.raises(beauville.Error):
        beauville.verify(3, 0)


def test_tampered_certificate_fails_recheck():
    cert = beauville.verify(3, 1)
    cert["witness_w"] = cert["pair1"][0]
    assert not all(r["pass"] for r in beauville.recheck(cert))
    with pytest.raises(beauville.ParseError):
        beauville.recheck("{")


def test_presentations():
    assert beauville.enumerate_order("< x, y | x^2, y^3, (x y)^3 >") == 12
    assert beauville.normalize_presentation("<x|x^3>") == "< x | x^3 >"
    assert beauville.enumerate_order(beauville.gamma_quotient_presentation(3, 3)) == 243
    with pytest.raises(beauville.ParseError):
        beauville.normalize_presentation("< x, y |\n x^3, z >")
    with pytest.raises(beauville.LimitExceeded):
        beauville.enumerate_order("< x, y | x^2, y^3, (x y)^3 >", max_cosets=3)


@pytest.mark.parametrize("n", [2, 3, 4, 6])
def test_abelian_none(n):
    assert beauville.abelian_search(n) is None


@pytest.mark.parametrize("n", [5, 7])
def test_abelian_found(n):
    r = beauville.abelian_search(n)
    assert r["strongly_real"]
    assert len(r["pair1"]) == 2 and len(r["pair2"]) == 2


def test_nottingham_lcs():
    rows = beauville.nottingham_lcs(3, 12)
    assert rows
    assert all(match for _, _, _, match in rows)


def test_maximal_class_layers():
    r = beauville.maximal_class_layers(3, 3)
    assert r["order"] == 81
    assert r["ok"] and r["uniserial"]
    assert r["outside_p1"] == r["outside_p1_order_p"] == 54


def test_intersection_lemmas():
    r = beauville.intersection_lemmas(3, 1)
    assert r["intersection1"]["ok"] and r["intersection1"]["cases"] > 0
    assert r["intersection2"]["ok"]
