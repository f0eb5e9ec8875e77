"""Compiled inner loops for weight enumeration and low-weight search."""
from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def pair_histogram(S, T, lo, hi, p, table, n_sym, paired, maxw):
    """Weight histogram of the words S[i] + T[j] for lo <= i < hi and all j.

    Rows are length n_sym (field codes) or 2*n_sym (ring codes, the two
    CRT components side by side).  The weight of a symbol is
    table[x, y] with y = 0 for field codes.
    """
    hist = np.zeros(maxw + 1, np.int64)
    nt = T.shape[0]
    for i in range(lo, hi):
        for j in range(nt):
            w = 0
            for c in range(n_sym):
                x = np.int64(S[i, c]) + np.int64(T[j, c])
                if x >= p:
                    x -= p
                y = np.int64(0)
                if paired:
                    y = np.int64(S[i, c + n_sym]) + np.int64(T[j, c + n_sym])
                    if y >= p:
                        y -= p
                w += table[x, y]
            hist[w] += 1
    return hist


@njit(cache=True)
def scan_level(mul, p, w, r, best, floor):
    """Try every message of Hamming weight w whose first nonzero entry is 1.

    ``mul[c, i]`` is c times row i of a systematic generator, restricted to
    the columns outside its pivot set; the first r rows carry the identity
    on the pivots, so a message picks up one unit of weight there for every
    chosen row below r.

    Returns (best, best_pos, best_coef, improved, count, hit_floor).  Stops
    early as soon as a codeword of weight <= floor turns up.
    """
    k = mul.shape[1]
    m = mul.shape[2]
    acc = np.zeros((w + 1, m), np.int64)
    pos = np.empty(w, np.int64)
    coef = np.empty(w, np.int64)
    piv = np.zeros(w + 1, np.int64)
    best_pos = np.zeros(w, np.int64)
    best_coef = np.zeros(w, np.int64)
    improved = False
    count = 0
    level = 0
    pos[0] = -1
    coef[0] = p - 1
    while level >= 0:
        if level > 0 and coef[level] < p - 1:
            coef[level] += 1
        else:
            pos[level] += 1
            coef[level] = 1
            if pos[level] > k - (w - level):
                level -= 1
                continue
        row = pos[level]
        c = coef[level]
        piv[level + 1] = piv[level] + (1 if row < r else 0)
        for j in range(m):
            x = acc[level, j] + mul[c, row, j]
            if x >= p:
                x -= p
            acc[level + 1, j] = x
        if level == w - 1:
            count += 1
            wt = piv[w]
            for j in range(m):
                if acc[w, j] != 0:
                    wt += 1
            if wt < best:
                best = wt
                improved = True
                for t in range(w):
                    best_pos[t] = pos[t]
                    best_coef[t] = coef[t]
                if best <= floor:
                    return best, best_pos, best_coef, improved, count, True
        else:
            level += 1
            pos[level] = pos[level - 1]
            coef[level] = p - 1
    return best, best_pos, best_coef, improved, count, False
