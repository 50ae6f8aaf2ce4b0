"""
Colexicographic ranking of k-subsets of {0, ..., n-1}.

Every potential face of a complex on n vertices is addressed by its
rank in the colexicographic ordering (the lexicographic ordering of the
descending sequences of the elements), so that the C(n, k) faces of a
given size occupy the dense index range 0, ..., C(n, k)-1.

"""
from functools import lru_cache

import numpy as np
from scipy.special import comb


@lru_cache(maxsize=64)
def comb_table(n, k):
    """
    Return the int64 table T with T[v, i] = C(v, i) for 0 <= v <= n and
    0 <= i <= k. The returned array is shared and read-only.

    """
    T = np.zeros((n+1, k+1), dtype=np.int64)
    for v in range(n+1):
        for i in range(k+1):
            T[v, i] = comb(v, i, exact=True)
    T.flags.writeable = False
    return T


def face_rank(faces, n):
    """
    Vectorized colexicographic rank of the rows of `faces`.

    Parameters
    ----------
    faces : array_like(int, ndim=2)
        Array of shape (m, k) whose rows are strictly increasing.

    n : scalar(int)
        Number of vertices; every entry must be smaller than n.

    Returns
    -------
    ranks : ndarray(int64, ndim=1)
        Array of length m.

    """
    faces = np.asarray(faces, dtype=np.int64)
    if faces.ndim != 2:
        raise ValueError('faces must be a 2-dimensional array')
    m, k = faces.shape
    ranks = np.zeros(m, dtype=np.int64)
    if k == 0 or m == 0:
        return ranks
    T = comb_table(n, k)
    for i in range(k):
        ranks += T[faces[:, i], i+1]
    return ranks


def face_unrank(ranks, n, k):
    """
    Inverse of `face_rank`: return the k-subsets of {0, ..., n-1} with
    the given colexicographic ranks, as rows of an array.

    Parameters
    ----------
    ranks : array_like(int, ndim=1)
        Ranks in [0, C(n, k)).

    n : scalar(int)
        Number of vertices.

    k : scalar(int)
        Size of the subsets.

    Returns
    -------
    faces : ndarray(int64, ndim=2)
        Array of shape (len(ranks), k) with ascending rows.

    """
    r = np.array(ranks, dtype=np.int64, copy=True).ravel()
    faces = np.empty((r.shape[0], k), dtype=np.int64)
    if k == 0:
        return faces
    total = comb(n, k, exact=True)
    if r.size and (r.min() < 0 or r.max() >= total):
        raise ValueError('ranks must lie in [0, C(n, k))')
    T = comb_table(n, k)
    for i in range(k-1, -1, -1):
        col = T[:n, i+1]
        v = np.searchsorted(col, r, side='right') - 1
        faces[:, i] = v
        r -= col[v]
    return faces


def all_faces(n, k):
    """
    Return all k-subsets of {0, ..., n-1} in colexicographic order.

    """
    return face_unrank(np.arange(comb(n, k, exact=True)), n, k)
