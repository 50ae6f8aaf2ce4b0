r"""
Boundary, coboundary and Laplace operators of a complex with complete
skeleton, assembled as sparse matrices in canonical face bases.

A j-form is a skew-symmetric function on oriented j-faces; it is stored
by its values on the canonically (ascending) oriented faces. For
:math:`j < d` the basis is all :math:`\binom{n}{j+1}` j-subsets in
colexicographic order, and for :math:`j = d` it is the top faces of the
complex in the order of `Complex.faces`.

The boundary operator is

.. math::

    (\partial_j f)(\sigma) = \sum_{v \sim \sigma} f(v\sigma)

so the entry of :math:`\partial_j` at (rho minus its i-th vertex, rho) is
:math:`(-1)^i`. With weights w on the faces the coboundary is

.. math::

    (\delta_j f)(\sigma) = \frac{1}{w(\sigma)} \sum_{i=0}^{j+1}
        (-1)^i w(\sigma \setminus v_i) f(\sigma \setminus v_i)

Under the combinatorial scheme all weights are 1 and
:math:`\delta_j = \partial_{j+1}^T`; under the normalized scheme the
(d-1)-faces carry weight 1/deg and all other faces weight 1.

"""
from dataclasses import dataclass

import numpy as np
from scipy import sparse
from scipy.special import comb

from ..util import all_faces, face_rank


COMBINATORIAL = 'combinatorial'
NORMALIZED = 'normalized'
_SCHEMES = (COMBINATORIAL, NORMALIZED)


@dataclass(frozen=True, eq=False)
class OperatorMatrix:
    """
    A linear operator between form spaces together with its face bases.

    Attributes
    ----------
    matrix : scipy.sparse.csr_matrix
        The operator; integer for the combinatorial boundary and
        coboundary, float otherwise.

    rows : ndarray(int64, ndim=2)
        Faces indexing the rows (the codomain basis).

    cols : ndarray(int64, ndim=2)
        Faces indexing the columns (the domain basis).

    scheme : str
        'combinatorial' or 'normalized'.

    """
    matrix: sparse.csr_matrix
    rows: np.ndarray
    cols: np.ndarray
    scheme: str = COMBINATORIAL

    @property
    def shape(self):
        return self.matrix.shape

    @property
    def T(self):
        return OperatorMatrix(self.matrix.T.tocsr(), self.cols, self.rows,
                              self.scheme)

    def triplets(self):
        """
        Return the nonzero entries as arrays (row, col, value).

        """
        coo = self.matrix.tocoo()
        return coo.row, coo.col, coo.data

    def toarray(self):
        return self.matrix.toarray()

    def dot(self, x):
        return self.matrix @ np.asarray(getattr(x, 'values', x))

    def __matmul__(self, other):
        if isinstance(other, OperatorMatrix):
            return OperatorMatrix((self.matrix @ other.matrix).tocsr(),
                                  self.rows, other.cols, self.scheme)
        return self.dot(other)


def _check_scheme(scheme):
    if scheme not in _SCHEMES:
        raise ValueError(
            "scheme must be one of {0}, got {1!r}".format(_SCHEMES, scheme)
        )


def face_basis(Y, j):
    """
    Return the canonical j-faces indexing j-forms on `Y`, as the rows of
    an array of shape (num_j_faces, j+1). For j = -1 this is the single
    empty face.

    """
    if not -1 <= j <= Y.d:
        raise ValueError('j must satisfy -1 <= j <= d = {0}'.format(Y.d))
    if j == Y.d:
        return Y.faces
    return all_faces(Y.n, j+1)


def boundary_matrix(Y, j):
    """
    Matrix of the boundary operator from j-forms to (j-1)-forms.

    Parameters
    ----------
    Y : Complex

    j : scalar(int)
        Dimension, 0 <= j <= d. For j = 0 the result is the augmentation
        map onto the forms on the empty face, a row of ones.

    Returns
    -------
    B : OperatorMatrix
        Integer matrix of shape (C(n, j), num_j_faces).

    """
    if not 0 <= j <= Y.d:
        raise ValueError('j must satisfy 0 <= j <= d = {0}'.format(Y.d))
    cols = face_basis(Y, j)
    rows = face_basis(Y, j-1)
    m = cols.shape[0]
    if j == Y.d:
        row_idx = Y.facet_ranks.T.ravel()
    else:
        row_idx = np.concatenate(
            [face_rank(np.delete(cols, i, axis=1), Y.n) for i in range(j+1)]
        )
    col_idx = np.tile(np.arange(m), j+1)
    data = np.repeat((-1) ** np.arange(j+1), m).astype(np.int64)
    B = sparse.csr_matrix((data, (row_idx, col_idx)),
                          shape=(rows.shape[0], m), dtype=np.int64)
    return OperatorMatrix(B, rows, cols, COMBINATORIAL)


def _ridge_weights(Y):
    deg = Y.codegree.astype(float)
    inv = np.zeros_like(deg)
    pos = deg > 0
    inv[pos] = 1 / deg[pos]
    return deg, inv


def coboundary_matrix(Y, j, scheme=COMBINATORIAL):
    """
    Matrix of the coboundary operator from j-forms to (j+1)-forms.

    Parameters
    ----------
    Y : Complex

    j : scalar(int)
        Dimension, 0 <= j <= d-1.

    scheme : str, optional(default='combinatorial')
        'combinatorial' (w = 1) or 'normalized' (w = 1/deg on the
        (d-1)-faces).

    Returns
    -------
    D : OperatorMatrix

    Notes
    -----
    Under the normalized scheme a (d-1)-face of co-degree 0 lies in no
    top face, so its column of the top coboundary is zero and its
    weight never enters.

    """
    _check_scheme(scheme)
    if not 0 <= j <= Y.d - 1:
        raise ValueError('j must satisfy 0 <= j <= d-1 = {0}'.format(Y.d-1))
    D = boundary_matrix(Y, j+1).T
    if scheme == COMBINATORIAL:
        return D
    deg, inv = _ridge_weights(Y)
    if j == Y.d - 1:
        M = D.matrix @ sparse.diags(inv)
    elif j == Y.d - 2:
        M = sparse.diags(deg) @ D.matrix
    else:
        M = D.matrix.astype(float)
    return OperatorMatrix(sparse.csr_matrix(M), D.rows, D.cols, NORMALIZED)


def upper_laplacian(Y, scheme=COMBINATORIAL):
    r"""
    Upper Laplacian :math:`\Delta^+ = \partial_d \delta_{d-1}` on
    (d-1)-forms.

    Under the combinatorial scheme

    .. math::

        (\Delta^+ f)(\sigma) = \deg(\sigma) f(\sigma) -
            \sum_{v\sigma \in Y} \sum_{i} (-1)^i f(v\sigma \setminus v_i)

    and the matrix is symmetric positive semidefinite. Under the
    normalized scheme :math:`(\Delta^+ f)(\sigma) = f(\sigma) -
    \sum_{\sigma' \sim \sigma} \pm f(\sigma')/\deg(\sigma')`.

    Parameters
    ----------
    Y : Complex

    scheme : str, optional(default='combinatorial')

    Returns
    -------
    L : OperatorMatrix
        Square matrix of size C(n, d).

    """
    _check_scheme(scheme)
    if scheme == NORMALIZED and Y.min_codegree == 0:
        raise ValueError(
            'the normalized Laplacian requires every (d-1)-face to have '
            'positive co-degree'
        )
    B = boundary_matrix(Y, Y.d)
    L = B @ coboundary_matrix(Y, Y.d-1, scheme)
    return OperatorMatrix(L.matrix, B.rows, B.rows, scheme)


def lower_laplacian(Y):
    r"""
    Combinatorial lower Laplacian
    :math:`\Delta^- = \delta_{d-2} \partial_{d-1}` on (d-1)-forms.

    """
    B = boundary_matrix(Y, Y.d-1)
    return B.T @ B


def hodge_laplacian(Y):
    r"""
    Combinatorial Hodge Laplacian :math:`\Delta^+ + \Delta^-` on
    (d-1)-forms.

    Since the skeleton is complete, :math:`\Delta^-` acts as n times the
    identity on the coboundaries, so the smallest eigenvalue of this
    operator is :math:`\min(\lambda(Y), n) = \lambda(Y)`.

    """
    up = upper_laplacian(Y)
    down = lower_laplacian(Y)
    return OperatorMatrix((up.matrix + down.matrix).tocsr(), up.rows,
                          up.cols, COMBINATORIAL)


def _permutation_sign(seq):
    sign = 1
    seq = list(seq)
    for i in range(len(seq)):
        for j in range(i+1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


class Cochain:
    """
    A real (d-1)-form on the complete (d-1)-skeleton on n vertices,
    stored by its values on the canonically oriented faces.

    Parameters
    ----------
    n : scalar(int)
        Number of vertices.

    d : scalar(int)
        Dimension of the ambient complex; the form lives on
        (d-1)-faces.

    values : array_like(float, ndim=1), optional
        Values indexed by colexicographic face rank. Defaults to zero.

    """

    def __init__(self, n, d, values=None):
        self.n, self.d = int(n), int(d)
        size = comb(self.n, self.d, exact=True)
        if values is None:
            values = np.zeros(size)
        values = np.asarray(values, dtype=float)
        if values.shape != (size,):
            raise ValueError(
                'values must have length C(n, d) = {0}'.format(size)
            )
        self.values = values

    def __repr__(self):
        return 'Cochain on the {0}-faces of {1} vertices'.format(
            self.d-1, self.n)

    def __len__(self):
        return self.values.shape[0]

    def __call__(self, face):
        """
        Evaluate on the oriented face given by the vertex sequence
        `face`; reversing an odd permutation flips the sign.

        """
        face = [int(v) for v in face]
        if len(face) != self.d or len(set(face)) != self.d:
            raise ValueError(
                'face must have {0} distinct vertices'.format(self.d)
            )
        r = face_rank(np.array([sorted(face)]), self.n)[0]
        return _permutation_sign(face) * self.values[r]

    def inner(self, other, weights=None):
        """
        Weighted inner product sum_sigma w(sigma) f(sigma) g(sigma);
        `weights` defaults to 1.

        """
        g = np.asarray(getattr(other, 'values', other), dtype=float)
        if weights is None:
            return float(self.values @ g)
        return float(np.sum(np.asarray(weights) * self.values * g))

    def norm(self, weights=None):
        return np.sqrt(self.inner(self, weights))
