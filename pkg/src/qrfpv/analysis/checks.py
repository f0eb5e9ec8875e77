"""Extremality and formal self-duality checks."""
from __future__ import annotations

from dataclasses import dataclass

from ..errors import ContractError, UnsupportedError
from ..gray_weights import WeightKind, gray_image_code
from ..linear_code import LinearCode
from .enumeration import DEFAULT_BUDGET, enumerate_weights


def bachoc_bound(n: int) -> int:
    """Upper bound 2(floor(n/3) + 1) on d_B of a Hermitian self-dual code."""
    return 2 * (n // 3 + 1)


@dataclass(frozen=True)
class BachocReport:
    bound: int
    d_B: int
    is_extremal: bool
    is_even: bool

    @property
    def within_bound(self) -> bool:
        return self.d_B <= self.bound


def bachoc_extremality(C: LinearCode, budget: int = DEFAULT_BUDGET, workers: int | None = None) -> BachocReport:
    """Bachoc distance against its bound, plus the Type IV (even) flag."""
    if not C.is_ring or C.p != 2:
        raise UnsupportedError("Bachoc weight needs a code over F_2 + vF_2")
    if not C.is_hermitian_self_dual():
        raise ContractError("code is not Hermitian self-dual")
    bach = enumerate_weights(C, WeightKind.BACHOC, budget=budget, workers=workers)
    ham = enumerate_weights(C, WeightKind.HAMMING, budget=budget, workers=workers)
    bound = bachoc_bound(C.n)
    d_b = bach.min_nonzero
    return BachocReport(
        bound=bound,
        d_B=d_b,
        is_extremal=d_b == bound,
        is_even=all(w % 2 == 0 for w in ham.counts),
    )


def formally_self_dual(C: LinearCode, budget: int = DEFAULT_BUDGET, workers: int | None = None) -> bool:
    """C and its Euclidean dual share a Hamming weight enumerator.

    Ring codes are compared through their Gray images.
    """
    if C.is_ring:
        C = gray_image_code(C)
    D = C.dual()
    if C == D:
        return True
    if C.card_exponent != D.card_exponent:
        return False
    a = enumerate_weights(C, WeightKind.HAMMING, budget=budget, workers=workers)
    b = enumerate_weights(D, WeightKind.HAMMING, budget=budget, workers=workers)
    return a == b
