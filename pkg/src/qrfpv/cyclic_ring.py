"""Arithmetic in R[x]/(x^n - 1) with R = F_p + vF_p.

F_p polynomials modulo x^n - 1 are plain int64 numpy arrays of length n
(index i is the coefficient of x^i).  Ring polynomials are :class:`RingPoly`,
which keeps the two CRT components s (v=0) and t (v=1) as such arrays.
"""
from __future__ import annotations

from math import gcd
from typing import Iterable, Sequence

import numpy as np

from .arith import RingElement, crt_join, parse_element
from .errors import ContractError, DomainError, ModulusMismatchError, UnsupportedError


def fp_poly(coeffs: Iterable[int], p: int, n: int | None = None) -> np.ndarray:
    arr = np.asarray(list(coeffs), dtype=np.int64) % p
    if n is not None and len(arr) != n:
        out = np.zeros(n, dtype=np.int64)
        for i, c in enumerate(arr):
            out[i % n] += c
        arr = out % p
    return arr


def fp_monomials(exponents: Iterable[int], p: int, n: int) -> np.ndarray:
    f = np.zeros(n, dtype=np.int64)
    for e in exponents:
        f[e % n] += 1
    return f % p


def fp_mul(f: np.ndarray, g: np.ndarray, p: int) -> np.ndarray:
    """Product in F_p[x]/(x^n - 1)."""
    n = len(f)
    full = np.convolve(f, g)
    out = full[:n].copy()
    out[: len(full) - n] += full[n:]
    return out % p


def fp_mu(a: int, f: np.ndarray) -> np.ndarray:
    """x^i -> x^(a*i mod n)."""
    n = len(f)
    if gcd(a, n) != 1:
        raise DomainError(f"multiplier {a} is not a unit modulo {n}")
    out = np.zeros_like(f)
    out[(a * np.arange(n)) % n] = f
    return out


def fp_reciprocal(f: np.ndarray) -> np.ndarray:
    return fp_mu(len(f) - 1, f)


def fp_is_idempotent(f: np.ndarray, p: int) -> bool:
    return np.array_equal(fp_mul(f, f, p), f % p)


def circulant(f: np.ndarray) -> np.ndarray:
    """All n cyclic shifts of f as rows (row i is x^i * f)."""
    n = len(f)
    return np.stack([np.roll(f, i) for i in range(n)])


class RingPoly:
    """Element of R_{p,n}; also used as a plain length-n vector over R."""

    __slots__ = ("p", "s", "t")

    def __init__(self, s: np.ndarray, t: np.ndarray, p: int):
        s = np.asarray(s, dtype=np.int64) % p
        t = np.asarray(t, dtype=np.int64) % p
        if s.shape != t.shape or s.ndim != 1:
            raise ModulusMismatchError("CRT components must be 1-d arrays of equal length")
        s.flags.writeable = False
        t.flags.writeable = False
        self.p = p
        self.s = s
        self.t = t

    # construction ---------------------------------------------------------

    @classmethod
    def from_ab(cls, a: Sequence[int], b: Sequence[int], p: int) -> RingPoly:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        return cls(a, a + b, p)

    @classmethod
    def from_elements(cls, elems: Sequence[RingElement]) -> RingPoly:
        if not elems:
            raise ValueError("empty coefficient list")
        p = elems[0].p
        if any(e.p != p for e in elems):
            raise ModulusMismatchError("mixed moduli in coefficient list")
        return cls.from_ab([e.a for e in elems], [e.b for e in elems], p)

    @classmethod
    def combine(cls, f0: np.ndarray, f1: np.ndarray, p: int) -> RingPoly:
        """(1-v) f0 + v f1."""
        return cls(f0, f1, p)

    @classmethod
    def constant(cls, c: RingElement | int, n: int, p: int) -> RingPoly:
        if isinstance(c, int):
            c = RingElement(c, 0, p)
        s, t = c.crt()
        z = np.zeros(n, dtype=np.int64)
        zs, zt = z.copy(), z.copy()
        zs[0], zt[0] = s, t
        return cls(zs, zt, p)

    @classmethod
    def zero(cls, n: int, p: int) -> RingPoly:
        z = np.zeros(n, dtype=np.int64)
        return cls(z, z, p)

    @classmethod
    def one(cls, n: int, p: int) -> RingPoly:
        return cls.constant(1, n, p)

    @classmethod
    def parse(cls, text: str, p: int) -> RingPoly:
        return cls.from_elements([parse_element(tok, p) for tok in text.split(",")])

    # views ------------------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.s)

    @property
    def a(self) -> np.ndarray:
        return self.s

    @property
    def b(self) -> np.ndarray:
        return (self.t - self.s) % self.p

    @property
    def coeffs(self) -> tuple[RingElement, ...]:
        return tuple(crt_join(int(x), int(y), self.p) for x, y in zip(self.s, self.t))

    def __getitem__(self, i: int) -> RingElement:
        return crt_join(int(self.s[i]), int(self.t[i]), self.p)

    def __len__(self):
        return self.n

    def __str__(self):
        return ",".join(str(c) for c in self.coeffs)

    def __repr__(self):
        return f"RingPoly([{self}], p={self.p})"

    def __eq__(self, other):
        if not isinstance(other, RingPoly):
            return NotImplemented
        return (
            self.p == other.p
            and np.array_equal(self.s, other.s)
            and np.array_equal(self.t, other.t)
        )

    def __hash__(self):
        return hash((self.p, self.s.tobytes(), self.t.tobytes()))

    def is_zero(self) -> bool:
        return not (self.s.any() or self.t.any())

    # arithmetic -------------------------------------------------------------

    def _same(self, other: RingPoly):
        if self.p != other.p or self.n != other.n:
            raise ModulusMismatchError(
                f"(p={self.p}, n={self.n}) vs (p={other.p}, n={other.n})"
            )

    def __add__(self, other):
        if not isinstance(other, RingPoly):
            return NotImplemented
        self._same(other)
        return RingPoly(self.s + other.s, self.t + other.t, self.p)

    def __sub__(self, other):
        if not isinstance(other, RingPoly):
            return NotImplemented
        self._same(other)
        return RingPoly(self.s - other.s, self.t - other.t, self.p)

    def __neg__(self):
        return RingPoly(-self.s, -self.t, self.p)

    def __mul__(self, other):
        if isinstance(other, RingElement):
            sc, tc = other.crt()
            return RingPoly(self.s * sc, self.t * tc, self.p)
        if isinstance(other, int):
            return RingPoly(self.s * other, self.t * other, self.p)
        if not isinstance(other, RingPoly):
            return NotImplemented
        return poly_mul(self, other)

    __rmul__ = __mul__


def poly_mul(f: RingPoly, g: RingPoly) -> RingPoly:
    """Cyclic convolution in R_{p,n}; done componentwise via the CRT."""
    f._same(g)
    return RingPoly(fp_mul(f.s, g.s, f.p), fp_mul(f.t, g.t, f.p), f.p)


def is_idempotent(f: RingPoly) -> bool:
    return poly_mul(f, f) == f


def idempotent_split(f: RingPoly) -> tuple[np.ndarray, np.ndarray]:
    """Return (f0, f1) with f = (1-v) f0 + v f1, both idempotent over F_p."""
    if not is_idempotent(f):
        raise ContractError("polynomial is not idempotent")
    return f.s.copy(), f.t.copy()


def mu_map(a: int, f: RingPoly) -> RingPoly:
    return RingPoly(fp_mu(a, f.s), fp_mu(a, f.t), f.p)


def reciprocal(f: RingPoly) -> RingPoly:
    """f(x^-1)."""
    return mu_map(f.n - 1, f)


def idempotent_of_sum(f: RingPoly, g: RingPoly) -> RingPoly:
    """Idempotent generator f + g - fg of <f> + <g>."""
    return f + g - f * g


def idempotent_of_intersection(f: RingPoly, g: RingPoly) -> RingPoly:
    return f * g


def idempotent_of_dual(f: RingPoly) -> RingPoly:
    """1 - f(x^-1), the idempotent of the Euclidean dual of <f>."""
    return RingPoly.one(f.n, f.p) - reciprocal(f)


# x -> (1-2v)x -------------------------------------------------------------
#
# 1-2v has CRT components (1, -1), so in components psi is
# s(x) -> s(x) and t(x) -> t(-x), and S_n = R[x]/(x^n - (1-2v)) splits as
# F_p[x]/(x^n - 1) x F_p[x]/(x^n + 1).


def psi_transform(f: RingPoly) -> RingPoly:
    """c(x) -> c((1-2v)x), landing in R[x]/(x^n - (1-2v)) for odd n."""
    if f.n % 2 == 0:
        raise UnsupportedError("psi is only an isomorphism for odd n")
    sign = np.where(np.arange(f.n) % 2 == 1, -1, 1)
    return RingPoly(f.s, f.t * sign, f.p)


def psi_inverse(g: RingPoly) -> RingPoly:
    # (1-2v)^2 = 1, so psi is its own inverse coefficientwise
    return psi_transform(g)


def _fp_mul_nega(f: np.ndarray, g: np.ndarray, p: int) -> np.ndarray:
    n = len(f)
    full = np.convolve(f, g)
    out = full[:n].copy()
    out[: len(full) - n] -= full[n:]
    return out % p


def poly_mul_S(f: RingPoly, g: RingPoly) -> RingPoly:
    """Product in S_n = R[x]/(x^n - (1-2v)), computed by direct reduction.

    Reduction substitutes x^n -> (1-2v) on the (a, b) representation, which
    keeps this independent of the CRT shortcut used in :func:`psi_transform`.
    """
    f._same(g)
    n, p = f.n, f.p
    fa, fb = f.a, f.b
    ga, gb = g.a, g.b
    # full products of a + bv polynomials: (fa + fb v)(ga + gb v)
    ca = np.convolve(fa, ga)
    cb = np.convolve(fa, gb) + np.convolve(fb, ga) + np.convolve(fb, gb)
    ra = ca[:n].copy()
    rb = cb[:n].copy()
    ha, hb = ca[n:], cb[n:]
    # (ha + hb v)(1 - 2v) = ha + (hb - 2ha - 2hb) v  since v^2 = v
    m = len(ha)
    ra[:m] += ha
    rb[:m] += -2 * ha - hb
    return RingPoly.from_ab(ra % p, rb % p, p)


def mu_units(n: int) -> list[int]:
    return [a for a in range(1, n) if gcd(a, n) == 1]


def format_poly(f: RingPoly) -> str:
    return str(f)


def parse_poly(text: str, p: int) -> RingPoly:
    return RingPoly.parse(text, p)
