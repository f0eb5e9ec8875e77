"""Exact weight enumerators by walking the whole message space."""
from __future__ import annotations

import multiprocessing as mp
import os
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .. import fplinalg as la
from ..errors import BudgetExceededError, UnsupportedError
from ..gray_weights import WeightKind, weight_table
from ..linear_code import LinearCode
from .kernels import pair_histogram

DEFAULT_BUDGET = 2**28


def default_workers() -> int:
    return len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else (os.cpu_count() or 1)


@dataclass(frozen=True)
class WeightEnumerator:
    kind: WeightKind
    counts: dict = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def min_nonzero(self) -> int | None:
        ws = [w for w, c in self.counts.items() if w > 0 and c]
        return min(ws) if ws else None

    def __getitem__(self, w: int) -> int:
        return self.counts.get(w, 0)

    def to_poly_string(self, var: str = "z") -> str:
        terms = []
        for w, c in sorted(self.counts.items()):
            if w == 0:
                terms.append(str(c))
            else:
                mono = var if w == 1 else f"{var}^{w}"
                terms.append(mono if c == 1 else f"{c}{mono}")
        return "+".join(terms)

    def to_csv(self) -> str:
        lines = ["weight,count"] + [f"{w},{c}" for w, c in sorted(self.counts.items())]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_poly_string(cls, text: str, kind="hamming", var: str = "z") -> WeightEnumerator:
        """Parse strings like "1+28z^4+198z^8" (also accepts z^{4} and spaces)."""
        counts = {}
        for term in re.sub(r"[\s{}]", "", text).split("+"):
            if not term:
                continue
            m = re.fullmatch(rf"(\d*)(?:{var}(?:\^(\d+))?)?", term)
            if not m:
                raise ValueError(f"bad enumerator term {term!r}")
            coef, exp = m.group(1), m.group(2)
            has_var = var in term
            c = int(coef) if coef else 1
            w = int(exp) if exp else (1 if has_var else 0)
            counts[w] = counts.get(w, 0) + c
        return cls(WeightKind.of(kind), dict(sorted(counts.items())))

    def __eq__(self, other):
        if not isinstance(other, WeightEnumerator):
            return NotImplemented
        strip = lambda d: {w: c for w, c in d.items() if c}
        return self.kind == other.kind and strip(self.counts) == strip(other.counts)


def _enumeration_plan(C: LinearCode, kind: WeightKind):
    """Split the generator in two halves; every codeword is S[i] + T[j]."""
    n, p = C.n, C.p
    if C.is_ring:
        C1, C2 = C.components
        z1 = np.zeros((C1.shape[0], n), dtype=np.int64)
        z2 = np.zeros((C2.shape[0], n), dtype=np.int64)
        rows = np.vstack([np.hstack([C1, z1]), np.hstack([z2, C2])])
        table = weight_table(p, kind)
        paired = True
        maxw = int(table.max()) * n
    else:
        if kind is not WeightKind.HAMMING:
            raise UnsupportedError("field codes only carry the Hamming weight")
        rows = C.generator
        table = np.zeros((p, 1), dtype=np.int64)
        table[1:, 0] = 1
        paired = False
        maxw = n
    k = rows.shape[0]
    half = (k + 1) // 2
    width = rows.shape[1]
    S = la.span_all(rows[:half].reshape(-1, width), p).astype(np.uint8)
    T = la.span_all(rows[half:].reshape(-1, width), p).astype(np.uint8)
    return S, T, table, n, paired, maxw


def _run_chunk(args):
    S, T, lo, hi, p, table, n, paired, maxw = args
    return pair_histogram(S, T, lo, hi, p, table, n, paired, maxw)


def enumerate_weights(
    C: LinearCode,
    kind="hamming",
    budget: int = DEFAULT_BUDGET,
    workers: int | None = None,
) -> WeightEnumerator:
    """Exact weight distribution of C.

    The work is split into contiguous ranges of the first half of the
    message space; histograms are summed, so the result does not depend on
    the number of workers.
    """
    kind = WeightKind.of(kind)
    size = C.cardinality
    if size > budget:
        raise BudgetExceededError(size, budget)
    S, T, table, n, paired, maxw = _enumeration_plan(C, kind)
    workers = default_workers() if workers is None else max(1, int(workers))
    nS = S.shape[0]
    bounds = np.linspace(0, nS, min(workers, nS) + 1).astype(int)
    jobs = [
        (S, T, int(lo), int(hi), C.p, table, n, paired, maxw)
        for lo, hi in zip(bounds[:-1], bounds[1:])
    ]
    if len(jobs) == 1:
        parts = [_run_chunk(jobs[0])]
    else:
        ctx = mp.get_context("fork")
        with ProcessPoolExecutor(max_workers=len(jobs), mp_context=ctx) as ex:
            parts = list(ex.map(_run_chunk, jobs))
    hist = np.sum(parts, axis=0)
    counts = {int(w): int(c) for w, c in enumerate(hist) if c}
    return WeightEnumerator(kind, counts)
