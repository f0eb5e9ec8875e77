import itertools

import pytest
from hypothesis import given, strategies as st

from qrfpv.arith import (
    PrimeField,
    RingElement,
    crt_join,
    crt_split,
    format_element,
    hermitian_conj,
    is_prime,
    is_qr_mod,
    one,
    parse_element,
    sqrt_mod_p,
    v,
    zero,
)
from qrfpv.errors import DomainError, ModulusMismatchError, UnsupportedError

PRIMES = [2, 3, 5, 7, 11]


def elements(p):
    return [RingElement(a, b, p) for a in range(p) for b in range(p)]


@st.composite
def ring_pair(draw):
    p = draw(st.sampled_from(PRIMES))
    a1, b1, a2, b2 = (draw(st.integers(0, p - 1)) for _ in range(4))
    return RingElement(a1, b1, p), RingElement(a2, b2, p)


def test_v_is_idempotent():
    for p in PRIMES:
        assert v(p) * v(p) == v(p)


def test_worked_products():
    assert RingElement(1, 1, 3) * RingElement(2, 0, 3) == RingElement(2, 2, 3)
    assert v(5) * (one(5) - v(5)) == zero(5)
    assert (one(3) - v(3)) * (one(3) - v(3)) == one(3) - v(3)


@given(ring_pair())
def test_crt_is_a_ring_isomorphism(pair):
    x, y = pair
    p = x.p
    sx, tx = crt_split(x)
    sy, ty = crt_split(y)
    assert crt_split(x * y) == ((sx * sy) % p, (tx * ty) % p)
    assert crt_split(x + y) == ((sx + sy) % p, (tx + ty) % p)
    assert crt_join(sx, tx, p) == x


@given(ring_pair())
def test_ring_axioms(pair):
    x, y = pair
    assert x * y == y * x
    assert x + y == y + x
    assert x * (x + y) == x * x + x * y
    assert x - x == zero(x.p)


def test_units_have_both_components_nonzero():
    for p in PRIMES:
        units = [x for x in elements(p) if x.is_unit()]
        assert len(units) == (p - 1) ** 2
        for x in units:
            assert x * x.inverse() == one(p)
    with pytest.raises(ZeroDivisionError):
        v(3).inverse()


def test_hermitian_conjugation_swaps_v_and_1_plus_v():
    assert hermitian_conj(v(2)) == RingElement(1, 1, 2)
    assert hermitian_conj(RingElement(1, 1, 2)) == v(2)
    assert hermitian_conj(one(2)) == one(2)
    for x, y in itertools.product(elements(2), repeat=2):
        assert hermitian_conj(x * y) == hermitian_conj(x) * hermitian_conj(y)
    with pytest.raises(UnsupportedError):
        hermitian_conj(v(3))


def test_quadratic_residues():
    assert is_qr_mod(2, 7)
    assert not is_qr_mod(3, 7)
    assert is_qr_mod(3, 11)
    assert is_qr_mod(5, 11)
    assert not is_qr_mod(2, 5)
    with pytest.raises(DomainError):
        is_qr_mod(3, 9)
    with pytest.raises(DomainError):
        is_qr_mod(7, 7)


def test_square_roots():
    assert sqrt_mod_p(-11, 3) == 1
    assert sqrt_mod_p(3, 7) is None
    for p in PRIMES:
        for a in range(p):
            r = sqrt_mod_p(a, p)
            if r is not None:
                assert r * r % p == a
    F = PrimeField(13)
    assert F.inv(5) * 5 % 13 == 1
    assert F.sqrt(10) in (6, 7)


def test_modulus_mismatch():
    with pytest.raises(ModulusMismatchError):
        RingElement(1, 1, 3) + RingElement(1, 1, 5)


def test_parse_and_format_round_trip():
    assert parse_element("1+2v", 3) == RingElement(1, 2, 3)
    assert parse_element("v", 5) == v(5)
    assert parse_element("-v", 5) == RingElement(0, 4, 5)
    assert parse_element("2v", 3) == RingElement(0, 2, 3)
    assert format_element(RingElement(1, 1, 2)) == "1+v"
    assert format_element(zero(7)) == "0"
    for p in PRIMES:
        for x in elements(p):
            assert parse_element(str(x), p) == x


def test_is_prime():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
