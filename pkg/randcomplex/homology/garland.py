r"""
Garland's local decomposition of the upper Laplacian.

For a d-complex with d >= 2 and a (d-1)-form f,

.. math::

    \Delta^+ = \sum_{\tau} \Delta^+_\tau - (d-1) D

where tau runs over the (d-2)-faces, :math:`\Delta^+_\tau` is the upper
Laplacian localized to the top faces containing tau, and D is the
diagonal co-degree operator. Each localized form is the graph Laplacian
form of the link graph of tau evaluated on the restriction

.. math::

    f_\tau(v) = f(v\tau)

and :math:`f_\tau` sums to zero over the link whenever f is a cycle.

"""
from collections import namedtuple

import numpy as np
from scipy.special import comb

from ..util import all_faces, face_rank
from .operators import boundary_matrix, upper_laplacian


class GarlandResiduals(namedtuple('GarlandResiduals',
                                  'laplacian local_form cycle_sum norm '
                                  'degree')):
    """
    Residuals of the local decomposition identities, each zero in exact
    arithmetic.

    Attributes
    ----------
    laplacian : scalar(float)
        Norm of Delta^+ f - (sum_tau Delta_tau f - (d-1) D f).

    local_form : scalar(float)
        Largest |<Delta_tau f, f> - <L_tau f_tau, f_tau>| over tau, with
        L_tau the Laplacian of the link graph.

    cycle_sum : scalar(float) or None
        Largest |sum_v f_tau(v)| over tau; None if f is not a cycle.

    norm : scalar(float)
        |sum_tau <f_tau, f_tau> - d <f, f>|.

    degree : scalar(float)
        |<D f, f> - (1/d) sum_tau <D_tau f_tau, f_tau>| with D_tau the
        degree matrix of the link graph.

    """
    __slots__ = ()

    @property
    def worst(self):
        vals = [v for v in self if v is not None]
        return max(vals)


def _restriction(Y, tau, f):
    """
    Return (vertices, f_tau) for the (d-2)-face `tau`.

    """
    vertices = np.setdiff1d(np.arange(Y.n), tau)
    k = vertices.shape[0]
    faces = np.empty((k, Y.d), dtype=np.int64)
    faces[:, :-1] = tau
    faces[:, -1] = vertices
    faces.sort(axis=1)
    pos = np.searchsorted(tau, vertices)
    sign = np.where(pos % 2 == 0, 1.0, -1.0)
    return vertices, sign * f[face_rank(faces, Y.n)]


def _localized_terms(Y, f):
    """
    Return (sum_tau Delta_tau f, <Delta_tau f, f> indexed by tau rank).

    """
    d = Y.d
    total = np.zeros_like(f)
    local = np.zeros(comb(Y.n, d-1, exact=True))
    signs = (-1.0) ** np.arange(d+1)
    for i in range(d+1):
        for j in range(i+1, d+1):
            ri, rj = Y.facet_ranks[:, i], Y.facet_ranks[:, j]
            bf = signs[i] * f[ri] + signs[j] * f[rj]
            np.add.at(total, ri, signs[i] * bf)
            np.add.at(total, rj, signs[j] * bf)
            tau = face_rank(np.delete(Y.faces, [i, j], axis=1), Y.n)
            np.add.at(local, tau, bf**2)
    return total, local


def garland_check(Y, f, cycle_tol=1e-9):
    """
    Evaluate the residuals of the local decomposition of the upper
    Laplacian on the (d-1)-form `f`.

    Parameters
    ----------
    Y : Complex
        Complex of dimension d >= 2.

    f : Cochain or array_like(float, ndim=1)
        Form of length C(n, d).

    cycle_tol : scalar(float), optional(default=1e-9)
        `f` is treated as a cycle if the norm of its boundary is at most
        cycle_tol * max(1, |f|).

    Returns
    -------
    residuals : GarlandResiduals

    """
    if Y.d < 2:
        raise ValueError('the local decomposition requires d >= 2')
    f = np.asarray(getattr(f, 'values', f), dtype=float)
    if f.shape != (Y.num_ridges,):
        raise ValueError(
            'f must have length C(n, d) = {0}'.format(Y.num_ridges)
        )

    deg = Y.codegree.astype(float)
    L = upper_laplacian(Y).matrix
    total, local = _localized_terms(Y, f)
    laplacian = np.linalg.norm(L @ f - (total - (Y.d-1) * deg * f))

    is_cycle = np.linalg.norm(boundary_matrix(Y, Y.d-1).matrix @ f) <= \
        cycle_tol * max(1.0, np.linalg.norm(f))

    local_form = 0.0
    cycle_sum = 0.0 if is_cycle else None
    norm_sum = 0.0
    degree_sum = 0.0
    for r, tau in enumerate(all_faces(Y.n, Y.d-1)):
        g = Y.link_graph(tau)
        vertices, f_tau = _restriction(Y, tau, f)
        link_form = f_tau @ (g.laplacian @ f_tau)
        local_form = max(local_form, abs(local[r] - link_form))
        if is_cycle:
            cycle_sum = max(cycle_sum, abs(f_tau.sum()))
        norm_sum += f_tau @ f_tau
        degree_sum += g.degrees @ f_tau**2

    norm = abs(norm_sum - Y.d * (f @ f))
    degree = abs((deg * f) @ f - degree_sum / Y.d)
    return GarlandResiduals(float(laplacian), float(local_form),
                            None if cycle_sum is None else float(cycle_sum),
                            float(norm), float(degree))
