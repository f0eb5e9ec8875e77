"""Gray maps F_p + vF_p -> F_p^2 and the Hamming, Lee and Bachoc weights.

Images use a block layout: the first n coordinates hold the first Gray
component of every symbol, the last n the second one.

In CRT coordinates (s, t) = (a, a+b) the maps become
  odd p:  a + bv -> (-b, 2a + b) = (s - t, s + t)
  p = 2:  a + bv -> (a, a + b)   = (s, t)
which is what the weight tables below are built from.
"""
from __future__ import annotations

from enum import Enum
from typing import Sequence

import numpy as np

from .arith import RingElement
from .cyclic_ring import RingPoly
from .errors import UnsupportedError
from .linear_code import LinearCode


class WeightKind(str, Enum):
    HAMMING = "hamming"
    LEE = "lee"
    BACHOC = "bachoc"

    @classmethod
    def of(cls, kind) -> WeightKind:
        return kind if isinstance(kind, cls) else cls(str(kind).lower())


def _as_poly(word) -> RingPoly:
    if isinstance(word, RingPoly):
        return word
    if isinstance(word, RingElement):
        return RingPoly.from_elements([word])
    return RingPoly.from_elements(list(word))


def gray_odd(word) -> np.ndarray:
    w = _as_poly(word)
    if w.p == 2:
        raise UnsupportedError("gray_odd needs odd p; use gray_binary for p=2")
    return np.concatenate([(w.s - w.t) % w.p, (w.s + w.t) % w.p])


def gray_binary(word) -> np.ndarray:
    w = _as_poly(word)
    if w.p != 2:
        raise UnsupportedError("gray_binary needs p=2")
    return np.concatenate([w.s, w.t])


def gray(word) -> np.ndarray:
    w = _as_poly(word)
    return gray_binary(w) if w.p == 2 else gray_odd(w)


def weight_table(p: int, kind) -> np.ndarray:
    """p x p table: weight of the ring symbol with CRT components (s, t)."""
    kind = WeightKind.of(kind)
    s, t = np.indices((p, p))
    if kind is WeightKind.HAMMING:
        tab = (s != 0) | (t != 0)
    elif kind is WeightKind.LEE:
        if p == 2:
            tab = s + t
        else:
            tab = (s != t).astype(np.int64) + ((s + t) % p != 0)
    else:
        if p != 2:
            raise UnsupportedError("Bachoc weight is defined for p=2 only")
        # 1 -> (1,1) weighs 1; v -> (0,1) and 1+v -> (1,0) weigh 2
        tab = np.array([[0, 2], [2, 1]])
    return tab.astype(np.int64)


def symbol_weight(x: RingElement, kind) -> int:
    s, t = x.crt()
    return int(weight_table(x.p, kind)[s, t])


def weight(word, kind) -> int:
    w = _as_poly(word)
    return int(weight_table(w.p, kind)[w.s, w.t].sum())


def gray_image_code(C: LinearCode) -> LinearCode:
    """F_p-linear image of a ring code; spans gray(g) and gray(v g) for all generators g."""
    if not C.is_ring:
        raise UnsupportedError("Gray image is taken of codes over F_p + vF_p")
    v = RingElement(0, 1, C.p)
    rows = []
    for g in C.generator_rows():
        rows.append(gray(g))
        rows.append(gray(g * v))
    if not rows:
        return LinearCode.zero(C.p, 2 * C.n, "field")
    return LinearCode.field(np.stack(rows), C.p, 2 * C.n)


def inner(x: Sequence, y: Sequence, p: int) -> int:
    return int(np.dot(np.asarray(x, dtype=np.int64), np.asarray(y, dtype=np.int64)) % p)
