import dataclasses
import json

import pytest

from qrfpv.cyclic_ring import RingPoly
from qrfpv.errors import UnsupportedError
from qrfpv.qr_construct import qr_family
from qrfpv.verify import verify_gray_properties, verify_hermitian_family, verify_psi, verify_qr_theorems


@pytest.mark.parametrize("p,q", [(2, 7), (3, 11), (5, 29), (3, 13), (7, 3), (2, 17)])
def test_theorems_hold(p, q):
    rep = verify_qr_theorems(p, q)
    assert rep.passed, rep.to_text()
    tag = "bQR" if q % 4 == 3 else "bQR41"
    assert {f"{tag}.{c}" for c in "abcdefg"} <= {it.id for it in rep.items}


def test_dual_pair_item_for_q_1_mod_4():
    rep = verify_qr_theorems(5, 29)
    assert any(it.id == "ext.duals" and it.passed for it in rep.items)


def flip_one_coefficient(F, which="idem_Q1"):
    f = getattr(F, which)
    s = f.s.copy()
    s[1] = (s[1] + 1) % F.p
    return dataclasses.replace(F, **{which: RingPoly(s, f.t, F.p)})


@pytest.mark.parametrize("p,q,field", [(3, 11, "idem_Q1"), (2, 7, "idem_Q1p"), (5, 29, "idem_Q2")])
def test_mutation_is_caught_with_witness(p, q, field):
    bad = flip_one_coefficient(qr_family(p, q), field)
    rep = verify_qr_theorems(p, q, bad)
    assert not rep.passed
    failures = rep.failures()
    assert len(failures) >= 2
    for it in failures:
        assert it.witness is not None or "size mismatch" in it.detail or "sizes" in it.detail
    payload = json.loads(rep.to_json())
    assert payload["pass"] is False
    assert any("witness" in it for it in payload["items"])


def test_report_never_short_circuits():
    bad = flip_one_coefficient(qr_family(3, 11))
    rep = verify_qr_theorems(3, 11, bad)
    good = verify_qr_theorems(3, 11)
    assert [it.id for it in rep.items] == [it.id for it in good.items]
    assert any(it.passed for it in rep.items)


def test_hermitian_family_q17():
    rep = verify_hermitian_family(17)
    assert rep.passed, rep.to_text()
    ids = {it.id for it in rep.items}
    assert sum(i.startswith("H.selfdual") for i in ids) == 6
    assert sum(i.startswith("H.bound") for i in ids) == 6


def test_hermitian_family_rejects_q7():
    with pytest.raises(UnsupportedError):
        verify_hermitian_family(7)


@pytest.mark.parametrize("p,n", [(2, 8), (3, 11), (5, 1), (7, 6)])
def test_gray_properties(p, n):
    rep = verify_gray_properties(p, n, trials=2000)
    assert rep.passed, rep.to_text()


@pytest.mark.parametrize("p,n", [(3, 5), (2, 7), (5, 3)])
def test_psi(p, n):
    rep = verify_psi(p, n, trials=200)
    assert rep.passed, rep.to_text()


def test_psi_rejects_even_length():
    with pytest.raises(UnsupportedError):
        verify_psi(3, 4)


def test_text_report_lists_every_item():
    rep = verify_qr_theorems(2, 7)
    text = rep.to_text()
    for it in rep.items:
        assert it.id in text
    assert text.rstrip().endswith("overall: PASS")
