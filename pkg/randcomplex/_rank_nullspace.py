import numpy as np
from numpy.linalg import svd
from scipy import sparse
from sympy import QQ
from sympy.polys.matrices import DomainMatrix


def _dense(A):
    if sparse.issparse(A):
        A = A.toarray()
    return np.atleast_2d(np.asarray(A, dtype=float))


def rank_est(A, atol=1e-13, rtol=0):
    """
    Estimate the rank of a matrix from its singular values.

    Parameters
    ----------
    A : array_like(float, ndim=1 or 2) or scipy.sparse matrix
        A should be at most 2-D.  A 1-D array with length n will be
        treated as a 2-D with shape (1, n)
    atol : scalar(float), optional(default=1e-13)
        The absolute tolerance for a zero singular value.  Singular
        values smaller than `atol` are considered to be zero.
    rtol : scalar(float), optional(default=0)
        The relative tolerance.  Singular values less than rtol*smax are
        considered to be zero, where smax is the largest singular value.

    Returns
    -------
    r : scalar(int)
        The estimated rank of the matrix.

    Note: If both `atol` and `rtol` are positive, the combined tolerance
    is the maximum of the two; that is:

        tol = max(atol, rtol * smax)

    """
    A = _dense(A)
    if A.size == 0:
        return 0
    s = svd(A, compute_uv=False)
    tol = max(atol, rtol * s[0])
    return int((s >= tol).sum())


def nullspace(A, atol=1e-13, rtol=0):
    """
    Compute an orthonormal basis for the nullspace of A from its
    singular value decomposition.

    Parameters
    ----------
    A : array_like(float, ndim=1 or 2) or scipy.sparse matrix
        A matrix of shape (m, k). A 1-D array with length k is treated
        as a 2-D array with shape (1, k).
    atol : scalar(float), optional(default=1e-13)
        The absolute tolerance for a zero singular value.
    rtol : scalar(float), optional(default=0)
        The relative tolerance, as in `rank_est`.

    Returns
    -------
    ns : ndarray(float, ndim=2)
        Array of shape (k, r), where r is the estimated dimension of the
        nullspace of `A`.  The columns of `ns` are orthonormal and each
        element in numpy.dot(A, ns) is approximately zero.

    """
    A = _dense(A)
    k = A.shape[1]
    if A.shape[0] == 0:
        return np.eye(k)
    u, s, vh = svd(A)
    tol = max(atol, rtol * s[0]) if s.size else atol
    nnz = int((s >= tol).sum())
    return vh[nnz:].conj().T


def exact_rank(A):
    """
    Rank of an integer matrix computed by exact elimination over the
    rationals.

    Parameters
    ----------
    A : array_like(int, ndim=2) or scipy.sparse matrix
        Matrix with integer entries.

    Returns
    -------
    r : scalar(int)

    """
    A = sparse.coo_matrix(A)
    m, k = A.shape
    if A.nnz == 0:
        return 0
    rows = {}
    for i, j, v in zip(A.row.tolist(), A.col.tolist(), A.data.tolist()):
        if v != 0:
            rows.setdefault(i, {})[j] = QQ(int(v))
    M = DomainMatrix(rows, (m, k), QQ)
    return int(M.rank())
