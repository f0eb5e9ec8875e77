import numpy as np
from hypothesis import given, settings, strategies as st

from qrfpv import fplinalg as la


@st.composite
def matrices(draw):
    p = draw(st.sampled_from([2, 3, 5, 7]))
    k = draw(st.integers(1, 5))
    n = draw(st.integers(1, 7))
    seed = draw(st.integers(0, 2**32 - 1))
    M = np.random.default_rng(seed).integers(0, p, (k, n))
    return M, p


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_rref_preserves_row_space(args):
    M, p = args
    R, piv = la.rref(M, p)
    assert R.shape[0] == len(piv) == la.rank(M, p)
    assert la.rank(np.vstack([R, M]), p) == len(piv)
    for i, c in enumerate(piv):
        col = R[:, c]
        assert col[i] == 1 and np.count_nonzero(col) == 1


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_nullspace_is_orthogonal_complement(args):
    M, p = args
    n = M.shape[1]
    N = la.nullspace(M, p, n)
    assert N.shape[0] == n - la.rank(M, p)
    if N.size:
        assert not ((M @ N.T) % p).any()


def test_span_all_enumerates_every_codeword():
    G = np.array([[1, 0, 1], [0, 1, 2]])
    words = la.span_all(G, 3)
    assert words.shape == (9, 3)
    assert len({tuple(w) for w in words}) == 9


def test_membership():
    G = np.array([[1, 1, 0, 0], [0, 0, 1, 1]])
    R, piv = la.rref(G, 2)
    assert la.in_rowspace(R, piv, np.array([1, 1, 1, 1]), 2)
    assert not la.in_rowspace(R, piv, np.array([1, 0, 0, 0]), 2)
