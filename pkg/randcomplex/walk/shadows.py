r"""
Upper shadows of sets of (d-1)-faces.

For a set S of m faces of size d, the upper shadow :math:`\partial^+ S`
is the set of (d+1)-subsets containing some member of S, and
:math:`F_i(S)` those containing exactly i members. Double counting the
pairs (sigma, rho) with sigma in S gives

.. math::

    \sum_{i=1}^{d+1} i \, f_i(S) = m (n - d)

and :math:`B_S = F_{d+1}(S)` is bounded by the Kruskal-Katona theorem:
if :math:`m = \binom{x}{d}` then :math:`|B_S| \le \binom{x}{d+1}`.

"""
from collections import namedtuple
from math import factorial

import numpy as np
from scipy.optimize import bisect
from scipy.sparse import csgraph

from ..util import face_rank
from .core import face_adjacency


ShadowProfile = namedtuple('ShadowProfile', 'm f B_count realized')
ShadowProfile.__doc__ = """
Coface counts of a set S of (d-1)-faces.

m : number of faces in S.
f : ndarray(int) (f_1, ..., f_{d+1}); f_i counts the potential cofaces
    containing exactly i members of S.
B_count : f_{d+1}, the potential cofaces all of whose facets lie in S.
realized : the same counts over the top faces of a complex, or None.
"""


def _faces_array(S, n, size):
    S = sorted({tuple(sorted(int(v) for v in s)) for s in S})
    if not S:
        raise ValueError('S must be non-empty')
    arr = np.array(S, dtype=np.int64)
    if arr.ndim != 2 or arr.shape[1] != size:
        raise ValueError('faces in S must have {0} vertices'.format(size))
    if arr.min() < 0 or arr.max() >= n:
        raise ValueError('S contains a vertex outside [0, n)')
    if np.any(np.diff(arr, axis=1) == 0):
        raise ValueError('S contains a face with repeated vertices')
    return arr


def coface_profile(n, d, S, Y=None):
    """
    Count the upper shadow of `S` by multiplicity.

    Parameters
    ----------
    n : scalar(int)
        Number of vertices.

    d : scalar(int)
        The faces of S have d vertices.

    S : iterable of tuple(int)
        Non-empty set of d-subsets of {0, ..., n-1}.

    Y : Complex, optional
        If given, the counts are also taken over the top faces of `Y`.

    Returns
    -------
    profile : ShadowProfile

    """
    arr = _faces_array(S, n, d)
    m = arr.shape[0]
    cofaces = []
    for face in arr:
        others = np.setdiff1d(np.arange(n), face)
        rho = np.empty((others.size, d+1), dtype=np.int64)
        rho[:, :d] = face
        rho[:, d] = others
        rho.sort(axis=1)
        cofaces.append(face_rank(rho, n))
    cofaces = np.concatenate(cofaces)
    ranks, mult = np.unique(cofaces, return_counts=True)

    f = np.bincount(mult, minlength=d+2)[1:].astype(np.int64)
    assert np.dot(np.arange(1, d+2), f) == m * (n - d)

    realized = None
    if Y is not None:
        if (Y.n, Y.d) != (n, d):
            raise ValueError('Y must have the same n and d')
        present = np.isin(ranks, Y.face_ranks)
        realized = np.bincount(mult[present], minlength=d+2)[1:] \
            .astype(np.int64)
    return ShadowProfile(m, f, int(f[-1]), realized)


def tight_components(Y, S):
    """
    Split the set of (d-1)-faces `S` into its maximal tightly connected
    subsets, connectivity being through the top faces of `Y`.

    Returns
    -------
    components : list(set(tuple(int)))
        Ordered by their smallest colexicographic rank.

    """
    arr = _faces_array(S, Y.n, Y.d)
    ranks = np.sort(face_rank(arr, Y.n))
    A = face_adjacency(Y)[ranks][:, ranks]
    num, labels = csgraph.connected_components(A, directed=False)
    faces = Y.ridges(ranks).tolist()
    components = [set() for _ in range(num)]
    for lab, face in zip(labels, faces):
        components[lab].add(tuple(face))
    return components


def generalized_binomial(x, k):
    """
    Return x (x-1) ... (x-k+1) / k! for real x.

    """
    return float(np.prod([x - i for i in range(k)]) / factorial(k))


def kruskal_katona_bound(r, m, xtol=1e-12):
    """
    Weak Kruskal-Katona bound on the number of (r+1)-cliques of an
    r-uniform hypergraph with m edges.

    Solves m = C(x, r) for the real x >= r by bisection and returns
    C(x, r+1).

    Parameters
    ----------
    r : scalar(int)
        Uniformity, r >= 1.

    m : scalar(int)
        Number of edges, m >= 1.

    Returns
    -------
    bound : scalar(float)

    """
    if r < 1 or m < 1:
        raise ValueError('r and m must be positive')
    x = bisect(lambda x: generalized_binomial(x, r) - m, r, r + m,
               xtol=xtol)
    return generalized_binomial(x, r + 1)


def interior_fraction_bound(d, m, n):
    r"""
    Upper bound :math:`(m \cdot d!)^{1/d} / (n (d+1))` on
    :math:`f_{d+1}(S) / (n m)` for a set S of m (d-1)-faces, a
    consequence of the Kruskal-Katona bound.

    """
    return (m * factorial(d)) ** (1 / d) / (n * (d + 1))
