"""Dense linear algebra over prime fields on int64 numpy arrays."""
from __future__ import annotations

import numpy as np


def _inv_table(p: int) -> np.ndarray:
    inv = np.zeros(p, dtype=np.int64)
    for x in range(1, p):
        inv[x] = pow(x, p - 2, p)
    return inv


def rref(M, p: int, col_order=None, keep_all: bool = False) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of M over F_p.

    Returns (R, pivots) where R has only the nonzero rows.  With
    ``col_order`` the pivot search visits columns in that order, which is
    how systematic forms on a chosen column set are produced.  With
    ``keep_all`` the non-pivot rows are returned too; they vanish on the
    visited columns but not necessarily elsewhere.
    """
    M = np.array(M, dtype=np.int64, ndmin=2) % p
    rows, cols = M.shape
    inv = _inv_table(p)
    order = range(cols) if col_order is None else col_order
    r = 0
    pivots = []
    for c in order:
        if r == rows:
            break
        nz = np.flatnonzero(M[r:, c])
        if nz.size == 0:
            continue
        i = r + nz[0]
        if i != r:
            M[[r, i]] = M[[i, r]]
        M[r] = (M[r] * inv[M[r, c]]) % p
        col = M[:, c].copy()
        col[r] = 0
        nzr = np.flatnonzero(col)
        if nzr.size:
            M[nzr] = (M[nzr] - np.outer(col[nzr], M[r])) % p
        pivots.append(c)
        r += 1
    return (M if keep_all else M[:r]), pivots


def rank(M, p: int) -> int:
    if np.size(M) == 0:
        return 0
    return len(rref(M, p)[1])


def canonical(M, p: int, n: int) -> np.ndarray:
    """RREF with a fixed (0, n) shape for the zero space."""
    M = np.asarray(M, dtype=np.int64)
    if M.size == 0:
        return np.zeros((0, n), dtype=np.int64)
    R, _ = rref(M.reshape(-1, n), p)
    return R


def nullspace(M, p: int, n: int) -> np.ndarray:
    """Basis (as rows) of {x in F_p^n : M x = 0}."""
    M = np.asarray(M, dtype=np.int64)
    if M.size == 0:
        return np.eye(n, dtype=np.int64)
    R, pivots = rref(M.reshape(-1, n), p)
    free = [c for c in range(n) if c not in set(pivots)]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for j, f in enumerate(free):
        basis[j, f] = 1
        for i, pc in enumerate(pivots):
            basis[j, pc] = (-R[i, f]) % p
    return basis


def in_rowspace(R: np.ndarray, pivots, x: np.ndarray, p: int) -> bool:
    """Membership of x in the row space of an RREF matrix R with given pivots."""
    x = np.asarray(x, dtype=np.int64) % p
    if R.shape[0] == 0:
        return not x.any()
    coeffs = x[list(pivots)]
    return np.array_equal((coeffs @ R) % p, x)


def span_all(G: np.ndarray, p: int) -> np.ndarray:
    """Every vector of the row space of G (rows assumed independent)."""
    G = np.asarray(G, dtype=np.int64)
    k, n = G.shape
    if k == 0:
        return np.zeros((1, n), dtype=np.int64)
    msgs = np.indices((p,) * k, dtype=np.int64).reshape(k, -1).T
    return (msgs @ G) % p
