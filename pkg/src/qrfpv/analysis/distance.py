"""Minimum distances: exhaustive, or certified information-set search.

The information-set search follows Brouwer and Zimmermann.  The generator
is brought into systematic form on pairwise disjoint column sets P_1, P_2,
...  (the j-th set may have rank r_j < k).  Once every message of weight
<= w has been tried for a set, any codeword not yet seen carries at least
w + 1 - (k - r_j) nonzeros on P_j, and these contributions add up to a
lower bound on the weight of every unseen codeword.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from .. import fplinalg as la
from ..errors import DomainError, UnsupportedError
from ..gray_weights import WeightKind, gray_image_code
from ..linear_code import LinearCode
from .enumeration import DEFAULT_BUDGET, enumerate_weights
from .kernels import scan_level

EXHAUSTIVE_AUTO_LIMIT = 2**26
DEFAULT_INFOSET_BUDGET = 5 * 10**8


@dataclass(frozen=True)
class DistanceReport:
    """``d`` is exact when certified, otherwise the lightest weight found."""

    d: int
    method: str
    certified: bool
    lower_bound: int
    messages: int = 0
    witness: np.ndarray | None = None

    def __str__(self):
        if self.certified:
            return f"d={self.d} ({self.method}, certified)"
        return f"{self.lower_bound} <= d <= {self.d} ({self.method}, uncertified)"

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "method": self.method,
            "certified": self.certified,
            "lower_bound": self.lower_bound,
            "messages": self.messages,
        }


def information_sets(G: np.ndarray, p: int) -> list[tuple[np.ndarray, list[int]]]:
    """Systematic forms on disjoint column sets, as (matrix, pivots) pairs."""
    G = np.asarray(G, dtype=np.int64)
    k, n = G.shape
    used: set[int] = set()
    out = []
    while len(used) < n:
        rest = [c for c in range(n) if c not in used]
        M, piv = la.rref(G, p, col_order=rest, keep_all=True)
        if not piv:
            break
        out.append((M, piv))
        used.update(piv)
    return out


def _bound(ranks, k, w_done, upto):
    """Lower bound when sets [0, upto) finished weight w_done and the rest w_done - 1."""
    total = 0
    for j, r in enumerate(ranks):
        w = w_done if j < upto else w_done - 1
        total += max(0, w + 1 - (k - r))
    return total


def infoset_distance(
    C: LinearCode,
    budget: int | None = DEFAULT_INFOSET_BUDGET,
) -> DistanceReport:
    """Minimum Hamming distance of a field code.

    ``budget`` caps the number of messages tried; a level that would
    overrun it is skipped and the report comes back uncertified.
    """
    if C.is_ring:
        raise UnsupportedError("information-set search runs on field codes")
    G = C.generator
    k, n = G.shape
    p = C.p
    if k == 0:
        raise DomainError("the zero code has no minimum distance")
    sets = []
    for M, piv in information_sets(G, p):
        rest = np.setdiff1d(np.arange(n), piv)
        mul = (np.arange(p)[:, None, None] * M[None, :, rest]) % p
        sets.append((M, len(piv), np.ascontiguousarray(mul)))
    ranks = [r for _, r, _ in sets]
    best = n + 1
    witness = None
    used = 0
    lower = _bound(ranks, k, 0, len(sets))
    for w in range(1, k + 1):
        for j, (M, r, mul) in enumerate(sets):
            contrib_after = max(0, w + 1 - (k - r))
            contrib_before = max(0, w - (k - r))
            if contrib_after == contrib_before:
                # this set cannot raise the bound at this level; skip it
                continue
            cost = comb(k, w) * (p - 1) ** (w - 1)
            if budget is not None and used + cost > budget:
                return DistanceReport(best, "infoset", False, lower, used, witness)
            best, pos, coef, improved, count, hit = scan_level(mul, p, w, r, best, lower)
            used += count
            if improved:
                witness = (coef @ M[pos]) % p
            if hit:
                return DistanceReport(best, "infoset", True, best, used, witness)
            lower = _bound(ranks, k, w, j + 1)
            if lower >= best:
                return DistanceReport(best, "infoset", True, best, used, witness)
    # every message of every weight has been tried on the first set
    return DistanceReport(best, "infoset", True, best, used, witness)


def min_distance(
    C: LinearCode,
    kind="hamming",
    strategy: str = "auto",
    budget: int = DEFAULT_BUDGET,
    infoset_budget: int | None = DEFAULT_INFOSET_BUDGET,
    workers: int | None = None,
) -> DistanceReport:
    kind = WeightKind.of(kind)
    if C.card_exponent == 0:
        raise DomainError("the zero code has no minimum distance")
    if strategy not in ("auto", "exhaustive", "infoset"):
        raise ValueError(f"unknown strategy {strategy!r}")
    if strategy == "auto":
        exhaustive_ok = C.cardinality <= min(budget, EXHAUSTIVE_AUTO_LIMIT)
        if kind is WeightKind.BACHOC:
            exhaustive_ok = True
        strategy = "exhaustive" if exhaustive_ok else "infoset"
    if strategy == "exhaustive":
        enum = enumerate_weights(C, kind, budget=budget, workers=workers)
        d = enum.min_nonzero
        return DistanceReport(d, "exhaustive", True, d, enum.total)
    if kind is WeightKind.BACHOC:
        raise UnsupportedError("information-set search does not apply to the Bachoc weight")
    if not C.is_ring:
        if kind is not WeightKind.HAMMING:
            raise UnsupportedError("field codes carry the Hamming weight only")
        return infoset_distance(C, infoset_budget)
    if kind is WeightKind.LEE:
        return infoset_distance(gray_image_code(C), infoset_budget)
    # Hamming weight of (1-v)s + vt is |supp s u supp t| >= max(wt s, wt t)
    reports = [infoset_distance(c, infoset_budget) for c in C.crt if c.card_exponent]
    best = min(reports, key=lambda r: r.d)
    certified = all(r.certified for r in reports)
    lower = min(r.lower_bound for r in reports)
    return DistanceReport(best.d, "infoset", certified, best.d if certified else lower,
                          sum(r.messages for r in reports))


