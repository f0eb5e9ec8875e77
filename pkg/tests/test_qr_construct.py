import numpy as np
import pytest

from qrfpv.arith import RingElement, parse_element
from qrfpv.cyclic_ring import RingPoly, fp_mul, is_idempotent, parse_poly
from qrfpv.errors import ContractError, NotQRSettingError, UnsupportedError
from qrfpv.linear_code import LinearCode
from qrfpv.qr_construct import (
    CODES,
    base_triples,
    check_setting,
    e_polys,
    extend,
    extension_constant,
    hermitian_augment,
    hermitian_augment_idempotent,
    idempotent_identities,
    qr_family,
    residue_sets,
)


def rows_from_text(text, p):
    return [RingPoly.from_elements([parse_element(x, p) for x in line.split()]) for line in text.strip().splitlines()]


def test_residue_sets():
    Q, N = residue_sets(7)
    assert Q == {1, 2, 4} and N == {3, 5, 6}
    Q, N = residue_sets(11)
    assert Q == {1, 3, 4, 5, 9}


@pytest.mark.parametrize(
    "p,q,triples",
    [
        # coefficients of 1, e1, e2 in the two base idempotents
        (5, 11, ((1, 2, 4), (1, 4, 2))),
        (5, 19, ((0, 0, 4), (0, 4, 0))),
        (7, 19, ((2, 4, 6), (2, 6, 4))),
        (2, 7, ((0, 0, 1), (0, 1, 0))),
    ],
)
def test_base_idempotents(p, q, triples):
    assert base_triples(p, q) == triples


def test_binary_base_idempotents_for_q_1_mod_8():
    F = qr_family(2, 17)
    one = np.eye(17, dtype=np.int64)[0]
    assert np.array_equal(F.a, (one + F.e2) % 2)
    assert np.array_equal(F.b, (one + F.e1) % 2)


@pytest.mark.parametrize("p,q", [(2, 7), (3, 11), (3, 13), (5, 11), (7, 3), (2, 17), (13, 3), (11, 5)])
def test_family_sizes_and_idempotents(p, q):
    F = qr_family(p, q)
    for w in CODES:
        assert is_idempotent(F.idempotent(w))
    assert F.code("Q1").dims == ((q + 1) // 2,) * 2
    assert F.code("Q1p").dims == ((q - 1) // 2,) * 2
    assert F.code("Q1p").issubset(F.code("Q1"))
    assert F.code("Q2p").issubset(F.code("Q2"))


def test_generator_of_q1_for_5_11():
    # (1+4v)(1 + 2e1 + 4e2) + v(1 + 2e2 + 4e1)
    F = qr_family(5, 11)
    e1, e2 = e_polys(5, 11)
    one = np.eye(11, dtype=np.int64)[0]
    f0 = (one + 2 * e1 + 4 * e2) % 5
    f1 = (one + 2 * e2 + 4 * e1) % 5
    assert F.idempotent("Q1") == RingPoly.combine(f0, f1, 5)


def test_worked_matrix_p2_q7():
    F = qr_family(2, 7)
    rows = rows_from_text(
        """
        0 1 1+v 1+v v 1+v v v
        0 v 1 1+v 1+v v 1+v v
        0 v v 1 1+v 1+v v 1+v
        1 1 1 1 1 1 1 1
        """,
        2,
    )
    C = LinearCode.from_ring_rows(rows)
    assert C == extend(F, "Q1")
    assert C.is_self_dual()


def test_worked_matrix_p3_q11():
    F = qr_family(3, 11)
    a = "1+2v"
    text = f"""
        0 {a} v {a} {a} {a} v v v {a} v
        v 0 {a} v {a} {a} {a} v v v {a}
        {a} v 0 {a} v {a} {a} {a} v v v
        v {a} v 0 {a} v {a} {a} {a} v v
        v v {a} v 0 {a} v {a} {a} {a} v
        v v v {a} v 0 {a} v {a} {a} {a}
    """
    C = LinearCode.from_ring_rows(rows_from_text(text, 3))
    assert C.card_exponent == 12
    assert C in (F.code("Q1"), F.code("Q2"))


def test_setting_errors():
    with pytest.raises(NotQRSettingError, match="quadratic residue modulo q"):
        check_setting(3, 7)
    with pytest.raises(NotQRSettingError, match="odd prime"):
        qr_family(2, 4)
    with pytest.raises(NotQRSettingError):
        qr_family(5, 5)


def test_extension_constants():
    # q = 3 mod 4: r with r^2 = -q mod p
    for p, q in [(3, 11), (5, 19), (7, 3), (2, 7)]:
        g = extension_constant(qr_family(p, q), "Q1")
        assert (g * g + q) % p == 0
    F = qr_family(3, 13)
    assert extension_constant(F, "Q1") == 1
    assert extension_constant(F, "Q2") == (-13) % 3
    with pytest.raises(ContractError):
        extension_constant(F, "Q1p")


@pytest.mark.parametrize("p,q", [(3, 11), (7, 3), (2, 23), (5, 11)])
def test_extensions_self_dual_for_q_3_mod_4(p, q):
    F = qr_family(p, q)
    for w in ("Q1", "Q2"):
        E = extend(F, w)
        assert E.n == q + 1 and E.card_exponent == q + 1
        assert E.is_self_dual()


@pytest.mark.parametrize("p,q", [(3, 13), (5, 29), (11, 5), (2, 17)])
def test_extensions_dual_pair_for_q_1_mod_4(p, q):
    F = qr_family(p, q)
    assert extend(F, "Q1").dual() == extend(F, "Q2")


def test_hermitian_augmentation():
    F = qr_family(2, 17)
    for w in ("Q1p", "Q2p"):
        for unit in ("v", "1+v"):
            C = hermitian_augment(F, w, unit)
            assert C.card_exponent == 17
            assert C.is_hermitian_self_dual()
    f = hermitian_augment_idempotent(F, "Q1p", "v")
    assert is_idempotent(f)
    with pytest.raises(UnsupportedError):
        hermitian_augment(qr_family(2, 7), "Q1p", "v")
    with pytest.raises(ContractError):
        hermitian_augment(F, "Q1", "v")


@pytest.mark.parametrize("p,q", [(3, 11), (5, 19), (7, 19), (3, 13), (13, 3), (5, 11)])
def test_intersection_idempotent_is_a_multiple_of_h(p, q):
    F = qr_family(p, q)
    ids = idempotent_identities(F)
    assert ids["ab_equals_lam_h"]
    assert ids["a_plus_b_equals_1_plus_lam_h"]
    # the unnormalised identity ab = h only holds when q = 1 mod p
    assert ids["ab_equals_h"] == (q % p == 1)
    assert ids["lam"] * q % p == 1


def test_which_is_case_insensitive():
    F = qr_family(2, 7)
    assert F.code("q1p") == F.code("Q1p")
