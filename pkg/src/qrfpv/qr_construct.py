"""Quadratic residue codes over F_p + vF_p and their relatives.

Base-field QR idempotents are found by searching the three dimensional
algebra spanned by 1, e1, e2 instead of using closed formulas, so the same
code path covers every combination of p mod 4, q mod 4 and p = 2.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product

import numpy as np

from . import fplinalg as la
from .arith import RingElement, is_prime, is_qr_mod, sqrt_mod_p
from .cyclic_ring import (
    RingPoly,
    circulant,
    fp_is_idempotent,
    fp_monomials,
    fp_mu,
    fp_mul,
    idempotent_of_sum,
)
from .errors import ContractError, DomainError, NotQRSettingError, UnsupportedError
from .linear_code import LinearCode

CODES = ("Q1", "Q2", "Q1p", "Q2p")


def residue_sets(q: int) -> tuple[frozenset[int], frozenset[int]]:
    if q < 3 or not is_prime(q):
        raise DomainError(f"q={q} is not an odd prime")
    Q = frozenset(i for i in range(1, q) if is_qr_mod(i, q))
    return Q, frozenset(range(1, q)) - Q


def e_polys(p: int, q: int) -> tuple[np.ndarray, np.ndarray]:
    Q, N = residue_sets(q)
    return fp_monomials(Q, p, q), fp_monomials(N, p, q)


def cyclic_dim(f: np.ndarray, p: int) -> int:
    return la.rank(circulant(f), p)


def check_setting(p: int, q: int) -> None:
    if not is_prime(p):
        raise NotQRSettingError(f"p={p} must be prime")
    if q < 3 or not is_prime(q):
        raise NotQRSettingError(f"q={q} must be an odd prime")
    if p == q:
        raise NotQRSettingError("p and q must be distinct")
    if not is_qr_mod(p, q):
        raise NotQRSettingError(f"p must be a quadratic residue modulo q (p={p}, q={q})")


@lru_cache(maxsize=None)
def _base_triples(p: int, q: int) -> tuple[tuple[int, int, int], tuple[int, int, int]]:
    check_setting(p, q)
    e1, e2 = e_polys(p, q)
    one = fp_monomials([0], p, q)
    nonres = min(residue_sets(q)[1])
    target = (q + 1) // 2
    found = []
    for c in product(range(p), repeat=3):
        f = (c[0] * one + c[1] * e1 + c[2] * e2) % p
        if not fp_is_idempotent(f, p):
            continue
        if np.array_equal(fp_mu(nonres, f), f):
            continue
        if cyclic_dim(f, p) == target:
            found.append(c)
    if len(found) != 2:
        raise RuntimeError(f"expected two QR idempotents for p={p}, q={q}, found {found}")
    return found[0], found[1]


def _from_triple(c, p: int, q: int) -> np.ndarray:
    e1, e2 = e_polys(p, q)
    one = fp_monomials([0], p, q)
    return (c[0] * one + c[1] * e1 + c[2] * e2) % p


def base_idempotents(p: int, q: int) -> tuple[np.ndarray, np.ndarray]:
    """Idempotents a, b of the two [q, (q+1)/2] QR codes over F_p.

    a is the one with the lexicographically smaller coordinates
    (c0, c1, c2) in the basis 1, e1, e2; b = mu_n(a) for any non-residue n.
    """
    ta, tb = _base_triples(p, q)
    return _from_triple(ta, p, q), _from_triple(tb, p, q)


def base_triples(p: int, q: int) -> tuple[tuple[int, int, int], tuple[int, int, int]]:
    return _base_triples(p, q)


def small_idempotents(a: np.ndarray, b: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
    """a' = 1 - b and b' = 1 - a, idempotents of the [q, (q-1)/2] QR codes."""
    one = np.zeros_like(a)
    one[0] = 1
    return (one - b) % p, (one - a) % p


@dataclass(frozen=True, eq=False)
class QRFamily:
    p: int
    q: int
    Qset: frozenset
    Nset: frozenset
    e1: np.ndarray
    e2: np.ndarray
    a: np.ndarray
    b: np.ndarray
    a_small: np.ndarray
    b_small: np.ndarray
    h: np.ndarray
    idem_Q1: RingPoly
    idem_Q2: RingPoly
    idem_Q1p: RingPoly
    idem_Q2p: RingPoly

    @property
    def q_mod4(self) -> int:
        return self.q % 4

    @property
    def nonresidue(self) -> int:
        return min(self.Nset)

    @property
    def lam(self) -> int:
        """q^-1 mod p; a*b = lam*h and a + b = 1 + lam*h."""
        return pow(self.q, self.p - 2, self.p)

    def idempotent(self, which: str) -> RingPoly:
        return getattr(self, f"idem_{_check_which(which)}")

    def code(self, which: str) -> LinearCode:
        return self._codes[_check_which(which)]

    @cached_property
    def _codes(self) -> dict:
        return {w: LinearCode.from_cyclic(self.idempotent(w)) for w in CODES}

    def h_ring(self) -> RingPoly:
        return RingPoly(self.h, self.h, self.p)

    def describe(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "qset": sorted(self.Qset),
            "idempotents": {w: str(self.idempotent(w)) for w in CODES},
            "cardinalities": {
                w: f"{self.p}^{self.code(w).card_exponent}" for w in CODES
            },
        }


def _check_which(which: str) -> str:
    key = {"q1": "Q1", "q2": "Q2", "q1p": "Q1p", "q2p": "Q2p"}.get(which.lower())
    if key is None:
        raise ValueError(f"unknown code selector {which!r}; expected one of {CODES}")
    return key


def qr_family(p: int, q: int) -> QRFamily:
    check_setting(p, q)
    Q, N = residue_sets(q)
    e1, e2 = e_polys(p, q)
    a, b = base_idempotents(p, q)
    a_s, b_s = small_idempotents(a, b, p)
    h = np.ones(q, dtype=np.int64)
    for arr in (e1, e2, a, b, a_s, b_s, h):
        arr.flags.writeable = False
    return QRFamily(
        p=p, q=q, Qset=Q, Nset=N, e1=e1, e2=e2, a=a, b=b,
        a_small=a_s, b_small=b_s, h=h,
        idem_Q1=RingPoly.combine(a, b, p),
        idem_Q2=RingPoly.combine(b, a, p),
        idem_Q1p=RingPoly.combine(a_s, b_s, p),
        idem_Q2p=RingPoly.combine(b_s, a_s, p),
    )


def extension_constant(family: QRFamily, which: str) -> int:
    """Entry of the all-ones row in the new coordinate."""
    p, q = family.p, family.q
    which = _check_which(which)
    if which not in ("Q1", "Q2"):
        raise ContractError("only Q1 and Q2 are extended")
    if q % 4 == 3:
        r = sqrt_mod_p(-q, p)
        if r is None:
            raise RuntimeError(f"-{q} is a non-residue mod {p}; reciprocity violated")
        # both roots give equivalent extensions; keep the smaller
        return min(r, (-r) % p)
    return 1 if which == "Q1" else (-q) % p


def extend(family: QRFamily, which: str = "Q1") -> LinearCode:
    """Extended code of length q+1, new coordinate at index 0.

    Rows: generators of the matching small code with 0 prepended, plus
    (g | 1 ... 1).
    """
    which = _check_which(which)
    g = extension_constant(family, which)
    small = family.code(which + "p")
    p, q = family.p, family.q
    rows = []
    for c in small.components:
        rows.append(np.hstack([np.zeros((c.shape[0], 1), dtype=np.int64), c]))
    last = np.hstack([[g], np.ones(q, dtype=np.int64)]).astype(np.int64)[None, :]
    return LinearCode.from_crt(np.vstack([rows[0], last]), np.vstack([rows[1], last]), p, q + 1)


def augment_unit(p: int, unit: str) -> RingElement:
    if unit == "v":
        return RingElement(0, 1, p)
    if unit in ("1+v", "1v"):
        return RingElement(1, 1, p)
    raise ValueError(f"unit must be 'v' or '1+v', got {unit!r}")


def hermitian_augment_idempotent(family: QRFamily, which: str, unit: str) -> RingPoly:
    _check_hermitian(family)
    which = _check_which(which)
    if which not in ("Q1p", "Q2p"):
        raise ContractError("augmentation applies to Q1p and Q2p")
    f = family.idempotent(which)
    u = family.h_ring() * augment_unit(2, unit)
    return idempotent_of_sum(f, u)


def hermitian_augment(family: QRFamily, which: str = "Q1p", unit: str = "v") -> LinearCode:
    """Q' + <u h> for u in {v, 1+v}; Hermitian self-dual when q = 1 mod 8."""
    return LinearCode.from_cyclic(hermitian_augment_idempotent(family, which, unit))


def _check_hermitian(family: QRFamily):
    if family.p != 2 or family.q % 8 != 1:
        raise UnsupportedError(
            f"Hermitian augmentation needs p=2 and q = 1 mod 8 (p={family.p}, q={family.q})"
        )


def idempotent_identities(family: QRFamily) -> dict:
    """Literal products/sums of base idempotents, for reporting."""
    p, a, b, h = family.p, family.a, family.b, family.h
    one = fp_monomials([0], p, family.q)
    lam = family.lam
    return {
        "ab_equals_lam_h": bool(np.array_equal(fp_mul(a, b, p), (lam * h) % p)),
        "a_plus_b_equals_1_plus_lam_h": bool(np.array_equal((a + b) % p, (one + lam * h) % p)),
        "ab_equals_h": bool(np.array_equal(fp_mul(a, b, p), h % p)),
        "lam": lam,
    }
