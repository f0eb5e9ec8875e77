"""Linear codes over F_p and over R = F_p + vF_p.

A ring code C is stored through the CRT as the pair (C1, C2) of F_p codes
obtained by setting v=0 and v=1 in every codeword, so C = (1-v)C1 + vC2 and
|C| = p^(k1 + k2).  Each component is kept in reduced row echelon form,
which makes equality a direct array comparison.
"""
from __future__ import annotations

from math import gcd
from typing import Sequence

import numpy as np

from . import fplinalg as la
from .arith import RingElement
from .cyclic_ring import RingPoly, circulant, is_idempotent
from .errors import ContractError, DomainError, ModulusMismatchError, UnsupportedError

RING = "ring"
FIELD = "field"


class LinearCode:
    """Immutable linear code; see the module docstring for the representation."""

    __slots__ = ("p", "n", "alphabet", "components", "_pivots")

    def __init__(self, p: int, n: int, components: Sequence[np.ndarray], alphabet: str):
        if alphabet not in (RING, FIELD):
            raise ValueError(f"unknown alphabet {alphabet!r}")
        expected = 2 if alphabet == RING else 1
        if len(components) != expected:
            raise ValueError(f"{alphabet} code needs {expected} component(s)")
        comps, pivs = [], []
        for M in components:
            M = np.asarray(M, dtype=np.int64)
            if M.size == 0:
                R, piv = np.zeros((0, n), dtype=np.int64), []
            else:
                R, piv = la.rref(M.reshape(-1, n), p)
            R.flags.writeable = False
            comps.append(R)
            pivs.append(tuple(piv))
        self.p = p
        self.n = n
        self.alphabet = alphabet
        self.components = tuple(comps)
        self._pivots = tuple(pivs)

    # constructors -----------------------------------------------------------

    @classmethod
    def field(cls, rows, p: int, n: int | None = None) -> LinearCode:
        rows = np.asarray(rows, dtype=np.int64)
        if n is None:
            n = rows.shape[-1]
        return cls(p, n, [rows], FIELD)

    @classmethod
    def from_crt(cls, c1_rows, c2_rows, p: int, n: int) -> LinearCode:
        return cls(p, n, [c1_rows, c2_rows], RING)

    @classmethod
    def from_ring_rows(cls, rows: Sequence[RingPoly], n: int | None = None, p: int | None = None) -> LinearCode:
        """R-submodule generated by the given vectors."""
        rows = list(rows)
        if not rows:
            if n is None or p is None:
                raise ValueError("empty generator list needs explicit n and p")
            return cls.zero(p, n)
        p, n = rows[0].p, rows[0].n
        if any(r.p != p or r.n != n for r in rows):
            raise ModulusMismatchError("generator rows disagree on p or length")
        # (1-v) g and v g split every generator into its components
        return cls.from_crt(np.stack([r.s for r in rows]), np.stack([r.t for r in rows]), p, n)

    @classmethod
    def from_cyclic(cls, f: RingPoly) -> LinearCode:
        """Ideal <f> of R_{p,n}: the R-span of all cyclic shifts of f."""
        return cls.from_crt(circulant(f.s), circulant(f.t), f.p, f.n)

    @classmethod
    def from_cyclic_idempotent(cls, f: RingPoly) -> LinearCode:
        if f.n % 2 == 0:
            raise UnsupportedError("idempotent generators are used for odd lengths only")
        if not is_idempotent(f):
            raise ContractError("generator is not idempotent")
        return cls.from_cyclic(f)

    @classmethod
    def full(cls, p: int, n: int, alphabet: str = RING) -> LinearCode:
        eye = np.eye(n, dtype=np.int64)
        return cls(p, n, [eye] * (2 if alphabet == RING else 1), alphabet)

    @classmethod
    def zero(cls, p: int, n: int, alphabet: str = RING) -> LinearCode:
        z = np.zeros((0, n), dtype=np.int64)
        return cls(p, n, [z] * (2 if alphabet == RING else 1), alphabet)

    @classmethod
    def zero_sum(cls, p: int, n: int, alphabet: str = RING) -> LinearCode:
        """{x : x_1 + ... + x_n = 0}."""
        H = la.nullspace(np.ones((1, n), dtype=np.int64), p, n)
        return cls(p, n, [H] * (2 if alphabet == RING else 1), alphabet)

    # basic data -------------------------------------------------------------

    @property
    def is_ring(self) -> bool:
        return self.alphabet == RING

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(c.shape[0] for c in self.components)

    @property
    def card_exponent(self) -> int:
        """log_p |C|."""
        return sum(self.dims)

    @property
    def cardinality(self) -> int:
        return self.p ** self.card_exponent

    @property
    def crt(self) -> tuple[LinearCode, LinearCode]:
        self._need_ring()
        return tuple(LinearCode(self.p, self.n, [c], FIELD) for c in self.components)

    @property
    def generator(self) -> np.ndarray:
        """Field generator matrix (field codes only)."""
        if self.is_ring:
            raise UnsupportedError("ring codes expose generator_rows() instead")
        return self.components[0]

    def generator_rows(self) -> list[RingPoly]:
        """Ring generators: (1-v) s_i for rows of C1 and v t_j for rows of C2."""
        self._need_ring()
        z = np.zeros(self.n, dtype=np.int64)
        C1, C2 = self.components
        return [RingPoly(s, z, self.p) for s in C1] + [RingPoly(z, t, self.p) for t in C2]

    def __repr__(self):
        return f"LinearCode({self.alphabet}, p={self.p}, n={self.n}, dims={self.dims})"

    # comparisons ------------------------------------------------------------

    def _need_ring(self):
        if not self.is_ring:
            raise UnsupportedError("operation needs a code over F_p + vF_p")

    def _compatible(self, other: LinearCode):
        if (self.p, self.n, self.alphabet) != (other.p, other.n, other.alphabet):
            raise ModulusMismatchError(
                f"{self.alphabet}(p={self.p}, n={self.n}) vs "
                f"{other.alphabet}(p={other.p}, n={other.n})"
            )

    def __eq__(self, other):
        if not isinstance(other, LinearCode):
            return NotImplemented
        self._compatible(other)
        return all(np.array_equal(a, b) for a, b in zip(self.components, other.components))

    def __hash__(self):
        return hash((self.p, self.n, self.alphabet) + tuple(c.tobytes() for c in self.components))

    def contains(self, word) -> bool:
        comps = _word_components(word, self)
        return all(
            la.in_rowspace(R, piv, x, self.p)
            for R, piv, x in zip(self.components, self._pivots, comps)
        )

    def __contains__(self, word):
        return self.contains(word)

    def issubset(self, other: LinearCode) -> bool:
        self._compatible(other)
        return all(
            la.in_rowspace(R, piv, row, self.p)
            for mine, R, piv in zip(self.components, other.components, other._pivots)
            for row in mine
        )

    def witness_not_in(self, other: LinearCode):
        """A generator of self outside other, or None when self is a subset."""
        self._compatible(other)
        for idx, (mine, R, piv) in enumerate(zip(self.components, other.components, other._pivots)):
            for row in mine:
                if not la.in_rowspace(R, piv, row, self.p):
                    if not self.is_ring:
                        return row.copy()
                    z = np.zeros(self.n, dtype=np.int64)
                    return RingPoly(row, z, self.p) if idx == 0 else RingPoly(z, row, self.p)
        return None

    # code algebra -----------------------------------------------------------

    def __add__(self, other: LinearCode) -> LinearCode:
        self._compatible(other)
        comps = [np.vstack([a, b]) for a, b in zip(self.components, other.components)]
        return LinearCode(self.p, self.n, comps, self.alphabet)

    def intersect(self, other: LinearCode) -> LinearCode:
        self._compatible(other)
        return (self.dual() + other.dual()).dual()

    __and__ = intersect

    def dual(self) -> LinearCode:
        """Euclidean dual; for ring codes componentwise through the CRT."""
        comps = [la.nullspace(c, self.p, self.n) for c in self.components]
        return LinearCode(self.p, self.n, comps, self.alphabet)

    def hermitian_dual(self) -> LinearCode:
        """Dual under sum x_i conj(y_i) over F_2 + vF_2.

        Conjugation swaps the CRT components, so C* = (C2^perp, C1^perp).
        """
        self._need_ring()
        if self.p != 2:
            raise UnsupportedError("Hermitian duality is defined for p=2 only")
        C1, C2 = self.components
        return LinearCode(self.p, self.n, [la.nullspace(C2, 2, self.n), la.nullspace(C1, 2, self.n)], RING)

    def is_self_dual(self) -> bool:
        return self == self.dual()

    def is_self_orthogonal(self) -> bool:
        return self.issubset(self.dual())

    def is_hermitian_self_dual(self) -> bool:
        return self == self.hermitian_dual()

    # coordinate maps --------------------------------------------------------

    def apply_permutation(self, perm: Sequence[int]) -> LinearCode:
        """Coordinate i of every codeword moves to position perm[i]."""
        perm = np.asarray(perm)
        if sorted(perm.tolist()) != list(range(self.n)):
            raise ValueError("not a permutation of the coordinates")
        comps = []
        for c in self.components:
            out = np.zeros_like(c)
            out[:, perm] = c
            comps.append(out)
        return LinearCode(self.p, self.n, comps, self.alphabet)

    def permute(self, a: int) -> LinearCode:
        """Multiplier i -> a*i mod n applied to all coordinates."""
        if gcd(a, self.n) != 1:
            raise DomainError(f"multiplier {a} is not a unit modulo {self.n}")
        return self.apply_permutation((a * np.arange(self.n)) % self.n)

    def scale_column(self, j: int, c: int) -> LinearCode:
        if c % self.p == 0:
            raise DomainError("column scale must be a unit")
        comps = []
        for M in self.components:
            M = M.copy()
            M[:, j] = (M[:, j] * c) % self.p
            comps.append(M)
        return LinearCode(self.p, self.n, comps, self.alphabet)


def _word_components(word, code: LinearCode):
    if code.is_ring:
        if isinstance(word, RingPoly):
            w = word
        elif len(word) and isinstance(word[0], RingElement):
            w = RingPoly.from_elements(list(word))
        else:
            raise TypeError("ring codes take RingPoly or RingElement sequences")
        if w.n != code.n or w.p != code.p:
            raise ModulusMismatchError("word length or modulus does not match the code")
        return (w.s, w.t)
    x = np.asarray(word, dtype=np.int64) % code.p
    if x.shape != (code.n,):
        raise ModulusMismatchError("word length does not match the code")
    return (x,)


# functional aliases ---------------------------------------------------------


def from_cyclic_idempotent(f: RingPoly) -> LinearCode:
    return LinearCode.from_cyclic_idempotent(f)


def euclidean_dual(C: LinearCode) -> LinearCode:
    return C.dual()


def hermitian_dual(C: LinearCode) -> LinearCode:
    return C.hermitian_dual()


def code_equal(A: LinearCode, B: LinearCode) -> bool:
    return A == B


def contains(C: LinearCode, word) -> bool:
    return C.contains(word)


def code_sum(A: LinearCode, B: LinearCode) -> LinearCode:
    return A + B


def intersect(A: LinearCode, B: LinearCode) -> LinearCode:
    return A.intersect(B)


def is_self_dual(C: LinearCode) -> bool:
    return C.is_self_dual()


def is_self_orthogonal(C: LinearCode) -> bool:
    return C.is_self_orthogonal()


def is_hermitian_self_dual(C: LinearCode) -> bool:
    return C.is_hermitian_self_dual()


def permute(C: LinearCode, a: int) -> LinearCode:
    return C.permute(a)
