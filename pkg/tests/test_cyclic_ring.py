import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qrfpv.arith import RingElement
from qrfpv.cyclic_ring import (
    RingPoly,
    circulant,
    fp_mul,
    idempotent_of_dual,
    idempotent_of_intersection,
    idempotent_of_sum,
    idempotent_split,
    is_idempotent,
    mu_map,
    parse_poly,
    poly_mul,
    poly_mul_S,
    psi_inverse,
    psi_transform,
    reciprocal,
)
from qrfpv.errors import ContractError, DomainError, ModulusMismatchError, UnsupportedError
from qrfpv.linear_code import LinearCode


def naive_mul(f: RingPoly, g: RingPoly) -> RingPoly:
    """Schoolbook product in R[x]/(x^n - 1) using ring elements."""
    n, p = f.n, f.p
    out = [RingElement(0, 0, p) for _ in range(n)]
    for i, x in enumerate(f.coeffs):
        for j, y in enumerate(g.coeffs):
            out[(i + j) % n] = out[(i + j) % n] + x * y
    return RingPoly.from_elements(out)


@st.composite
def poly_pairs(draw, odd=False):
    p = draw(st.sampled_from([2, 3, 5, 7]))
    n = draw(st.sampled_from([3, 5, 7, 9] if odd else [2, 3, 4, 5, 7]))
    seed = draw(st.integers(0, 2**32 - 1))
    rng = np.random.default_rng(seed)
    mk = lambda: RingPoly.from_ab(rng.integers(0, p, n), rng.integers(0, p, n), p)
    return mk(), mk()


@settings(max_examples=60, deadline=None)
@given(poly_pairs())
def test_product_matches_schoolbook(pair):
    f, g = pair
    assert poly_mul(f, g) == naive_mul(f, g)


def test_fp_mul_wraps_around():
    f = np.array([0, 1, 0])
    assert fp_mul(f, f, 5).tolist() == [0, 0, 1]
    assert fp_mul(np.array([0, 0, 1]), f, 5).tolist() == [1, 0, 0]


def test_idempotent_split_and_contract():
    e = RingPoly.constant(RingElement(0, 1, 3), 4, 3)
    assert is_idempotent(e)
    s, t = idempotent_split(e)
    assert not s.any() and t[0] == 1
    with pytest.raises(ContractError):
        idempotent_split(RingPoly.constant(2, 4, 3))


def test_idempotent_algebra_on_generated_codes():
    p, n = 2, 7
    f = parse_poly("1,1+v,1+v,v,1+v,v,v", p)
    g = mu_map(3, f)
    for e in (f, g):
        assert is_idempotent(e)
    A, B = LinearCode.from_cyclic(f), LinearCode.from_cyclic(g)
    assert LinearCode.from_cyclic(idempotent_of_sum(f, g)) == A + B
    assert LinearCode.from_cyclic(idempotent_of_intersection(f, g)) == A & B
    assert LinearCode.from_cyclic(idempotent_of_dual(f)) == A.dual()


def test_multiplier_and_reciprocal():
    f = RingPoly.from_ab([1, 2, 0, 0, 1], [0, 1, 1, 0, 0], 3)
    assert reciprocal(reciprocal(f)) == f
    assert mu_map(4, f) == reciprocal(f)
    with pytest.raises(DomainError):
        mu_map(5, f)


def test_circulant_rows_are_shifts():
    f = np.array([1, 2, 0, 3])
    C = circulant(f)
    assert C[1].tolist() == [3, 1, 2, 0]


@settings(max_examples=60, deadline=None)
@given(poly_pairs(odd=True))
def test_psi_is_a_ring_map(pair):
    f, g = pair
    assert psi_transform(poly_mul(f, g)) == poly_mul_S(psi_transform(f), psi_transform(g))
    assert psi_inverse(psi_transform(f)) == f


def test_psi_worked_example():
    # coefficient i gets multiplied by (1 - 2v)^i
    p = 3
    f = RingPoly.from_elements([RingElement(1, 0, p)] * 3)
    u = RingElement(1, -2, p)
    expected = RingPoly.from_elements([RingElement(1, 0, p), u, u * u])
    assert psi_transform(f) == expected


def test_psi_rejects_even_length():
    with pytest.raises(UnsupportedError):
        psi_transform(RingPoly.one(4, 3))


def test_length_mismatch():
    with pytest.raises(ModulusMismatchError):
        RingPoly.one(3, 3) + RingPoly.one(4, 3)


def test_parse_round_trip():
    f = parse_poly("1+2v,0,v,2", 3)
    assert str(f) == "1+2v,0,v,2"
