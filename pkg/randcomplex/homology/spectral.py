r"""
Spectral gap of the combinatorial upper Laplacian over the cycle space

.. math::

    \lambda(Y) = \min \mathrm{Spec}(\Delta^+ |_{Z_{d-1}(Y)})

and the dimension of the harmonic (d-1)-forms, which equals the real
(d-1)-st Betti number of Y.

"""
import warnings
from collections import namedtuple

import numpy as np
from scipy import linalg
from scipy.sparse.linalg import eigsh, ArpackNoConvergence
from scipy.special import comb

from .._rank_nullspace import rank_est, nullspace, exact_rank
from ..util import check_random_state
from .operators import (
    boundary_matrix, upper_laplacian, hodge_laplacian, Cochain
)


RANK_RTOL = 1e-10
HARMONIC_TOL = 1e-8
DENSE_DIM_LIMIT = 3000
EXACT_RANK_LIMIT = 5000


class SpectralReport(namedtuple('SpectralReport',
                                'lam cycle_dim harmonic_dim spectrum method')):
    """
    Result of `spectral_gap`.

    Attributes
    ----------
    lam : scalar(float)
        Smallest eigenvalue of the upper Laplacian on the cycle space.

    cycle_dim : scalar(int)
        Dimension of Z_{d-1}.

    harmonic_dim : scalar(int)
        Dimension of the harmonic (d-1)-forms.

    spectrum : ndarray(float, ndim=1) or None
        Sorted spectrum on the cycle space, if requested.

    method : str
        'dense' or 'iterative'.

    """
    __slots__ = ()

    def to_dict(self):
        out = {'lambda': float(self.lam),
               'cycle_dim': int(self.cycle_dim),
               'harmonic_dim': int(self.harmonic_dim)}
        if self.spectrum is not None:
            out['spectrum'] = [float(x) for x in self.spectrum]
        return out


def cycle_space_basis(Y, rtol=RANK_RTOL):
    """
    Orthonormal basis of the cycle space Z_{d-1} = ker of the boundary
    on (d-1)-forms.

    Parameters
    ----------
    Y : Complex

    rtol : scalar(float), optional(default=1e-10)
        Singular values below rtol times the largest are treated as zero.

    Returns
    -------
    Z : ndarray(float, ndim=2)
        Array of shape (C(n, d), cycle_dim) with orthonormal columns.

    """
    B = boundary_matrix(Y, Y.d-1).matrix
    return nullspace(B, rtol=rtol)


def _boundary_rank(Y, j, exact_limit, rtol):
    B = boundary_matrix(Y, j).matrix
    if comb(Y.n, j+1, exact=True) <= exact_limit:
        r = exact_rank(B)
        r_num = rank_est(B, rtol=rtol)
        if r_num != r:
            warnings.warn(
                'numeric rank {0} of the boundary in dimension {1} differs '
                'from the exact rank {2}'.format(r_num, j, r)
            )
        return r
    return rank_est(B, rtol=rtol)


def cycle_dimension(Y):
    """
    Dimension of Z_{d-1}. With a complete (d-1)-skeleton the boundary
    on (d-1)-forms has rank C(n-1, d-1), so this is C(n-1, d).

    """
    return comb(Y.n - 1, Y.d, exact=True)


def harmonic_dimension(Y, exact_limit=EXACT_RANK_LIMIT, rtol=RANK_RTOL):
    """
    Dimension of the harmonic (d-1)-forms, dim Z_{d-1} - rank of the
    top boundary.

    The rank is computed by exact elimination over the rationals when
    C(n, d+1) <= `exact_limit` and from singular values otherwise.

    Parameters
    ----------
    Y : Complex

    exact_limit : scalar(int), optional(default=5000)

    rtol : scalar(float), optional(default=1e-10)

    Returns
    -------
    h : scalar(int)

    """
    cycle_dim = comb(Y.n, Y.d, exact=True) - \
        _boundary_rank(Y, Y.d-1, exact_limit, rtol)
    top_rank = _boundary_rank(Y, Y.d, exact_limit, rtol) if Y.num_faces \
        else 0
    return cycle_dim - top_rank


def spectral_gap(Y, full_spectrum=False, dense_limit=DENSE_DIM_LIMIT,
                 tol=HARMONIC_TOL, rtol=RANK_RTOL):
    r"""
    Compute the spectral gap of `Y`, the smallest eigenvalue of the
    combinatorial upper Laplacian restricted to the cycle space.

    Parameters
    ----------
    Y : Complex

    full_spectrum : bool, optional(default=False)
        If True, also return the sorted spectrum on the cycle space
        (dense path only).

    dense_limit : scalar(int), optional(default=3000)
        Largest C(n, d) for which the projected operator
        :math:`B^T \Delta^+ B` is formed and diagonalized densely.

    tol : scalar(float), optional(default=1e-8)
        Eigenvalues below `tol` count as harmonic.

    rtol : scalar(float), optional(default=1e-10)
        Relative rank tolerance for the cycle space basis.

    Returns
    -------
    report : SpectralReport

    Notes
    -----
    Above `dense_limit` the smallest eigenvalue of the Hodge Laplacian
    :math:`\Delta^+ + \Delta^-` is computed by Lanczos iteration with
    tolerance 1e-8 and at most 10 * C(n, d) iterations. With a complete
    skeleton this equals the spectral gap.

    """
    dim = comb(Y.n, Y.d, exact=True)
    if dim <= dense_limit:
        Z = cycle_space_basis(Y, rtol=rtol)
        L = upper_laplacian(Y).matrix.astype(float)
        M = Z.T @ (L @ Z)
        evals = linalg.eigvalsh((M + M.T) / 2)
        lam = max(float(evals[0]), 0.0)
        harmonic_dim = int(np.sum(evals < tol))
        spectrum = evals if full_spectrum else None
        return SpectralReport(lam, Z.shape[1], harmonic_dim, spectrum,
                              'dense')

    H = hodge_laplacian(Y).matrix.astype(float)
    try:
        evals = eigsh(H, k=1, which='SA', tol=1e-8, maxiter=10*dim,
                      return_eigenvectors=False)
    except ArpackNoConvergence:
        raise RuntimeError("Failed to converge")
    lam = max(float(evals[0]), 0.0)
    harmonic_dim = 0 if lam >= tol else harmonic_dimension(Y, rtol=rtol)
    return SpectralReport(lam, cycle_dimension(Y), harmonic_dim, None,
                          'iterative')


def random_cycle(Y, random_state=None):
    """
    Return a random element of Z_{d-1}, a standard Gaussian combination
    of an orthonormal basis of the cycle space.

    Parameters
    ----------
    Y : Complex

    random_state : int or np.random.Generator, optional

    Returns
    -------
    f : Cochain

    """
    rng = check_random_state(random_state)
    Z = cycle_space_basis(Y)
    return Cochain(Y.n, Y.d, Z @ rng.standard_normal(Z.shape[1]))


def adjacency_form_bound(g):
    r"""
    Return :math:`\max_{f \perp 1, \|f\| = 1} \langle Af, f \rangle` for
    the adjacency matrix A of the graph `g`.

    Parameters
    ----------
    g : LinkGraph

    Returns
    -------
    value : scalar(float)
        Largest eigenvalue of A compressed to the orthogonal complement
        of the all-ones vector; 0 for graphs on at most one vertex.

    """
    m = g.num_vertices
    if m <= 1:
        return 0.0
    Q = nullspace(np.ones((1, m)))
    A = g.adjacency_matrix.toarray()
    M = Q.T @ A @ Q
    return float(linalg.eigvalsh((M + M.T) / 2)[-1])
