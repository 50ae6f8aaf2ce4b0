r"""
The gamma-lazy random walk on the (d-1)-faces of a d-complex.

From the face :math:`\sigma` the walk stays put with probability
:math:`\gamma` and otherwise moves to a face :math:`\sigma' \sim \sigma`
sharing a top face with it, each with probability

.. math::

    \frac{1-\gamma}{d \cdot \deg(\sigma)}

Faces of co-degree 0 have no neighbors and are excluded from the state
space. The stationary distribution is

.. math::

    \pi(\sigma) = \frac{\deg(\sigma)}{(d+1) |Y^{(d)}|}

for every gamma.

"""
import warnings
from collections import namedtuple

import numpy as np
from scipy import sparse

from ..util import check_random_state


def face_adjacency(Y):
    """
    Adjacency matrix of the relation "shares a top face" on the
    (d-1)-faces of `Y`, indexed by colexicographic rank.

    Returns
    -------
    A : scipy.sparse.csr_matrix(bool)
        Symmetric matrix of shape (C(n, d), C(n, d)).

    """
    rows, cols = [], []
    for i in range(Y.d + 1):
        for j in range(Y.d + 1):
            if i != j:
                rows.append(Y.facet_ranks[:, i])
                cols.append(Y.facet_ranks[:, j])
    N = Y.num_ridges
    rows, cols = np.concatenate(rows), np.concatenate(cols)
    data = np.ones(len(rows), dtype=bool)
    return sparse.csr_matrix((data, (rows, cols)), shape=(N, N))


class StationaryDist(namedtuple('StationaryDist', 'pi')):
    """
    Attributes
    ----------
    pi : ndarray(float, ndim=1)
        Probability vector of length C(n, d) indexed by face rank; zero
        on faces of co-degree 0.

    """
    __slots__ = ()


def stationary(Y):
    """
    Stationary distribution of the face walk on `Y`.

    """
    if Y.num_faces == 0:
        raise ValueError('the complex has no top faces')
    return StationaryDist(Y.codegree / ((Y.d + 1) * Y.num_faces))


class WalkKernel:
    """
    Transition kernel of the gamma-lazy face walk.

    Parameters
    ----------
    Y : Complex

    gamma : scalar(float), optional(default=0)
        Laziness, in [0, 1).

    Attributes
    ----------
    support : ndarray(int64, ndim=1)
        Ranks of the (d-1)-faces with positive co-degree, ascending.
        State i of the chain is the face of rank support[i].

    P : scipy.sparse.csr_matrix
        Row-stochastic transition matrix on the support.

    """

    def __init__(self, Y, gamma=0.):
        if not 0 <= gamma < 1:
            raise ValueError('gamma must lie in [0, 1)')
        self.Y = Y
        self.gamma = float(gamma)
        self.support = np.flatnonzero(Y.codegree > 0)
        if self.support.size == 0:
            raise ValueError('no (d-1)-face has positive co-degree')
        excluded = Y.num_ridges - self.support.size
        if excluded:
            warnings.warn(
                '{0} faces of co-degree 0 are excluded from the state '
                'space'.format(excluded)
            )
        self.n = self.support.size
        self._index = np.full(Y.num_ridges, -1, dtype=np.int64)
        self._index[self.support] = np.arange(self.n)

        A = face_adjacency(Y)[self.support][:, self.support].tocsr()
        deg = Y.codegree[self.support].astype(float)
        step = (1 - self.gamma) / (Y.d * deg)
        P = sparse.diags(step) @ A.astype(float)
        if self.gamma > 0:
            P = P + self.gamma * sparse.identity(self.n)
        self.P = sparse.csr_matrix(P)
        self.P.sort_indices()
        self._cdfs1d = None

    def __repr__(self):
        msg = "{0}-lazy face walk with {1} states"
        return msg.format(self.gamma, self.n)

    def index_of(self, sigma):
        """
        Return the state index of the (d-1)-face `sigma`.

        """
        i = self._index[self.Y.ridge_rank(sigma)]
        if i < 0:
            raise ValueError(
                'face {0} has co-degree 0 and is not a state'.format(
                    tuple(sigma))
            )
        return int(i)

    @property
    def stationary_distribution(self):
        """Stationary distribution restricted to the support."""
        return stationary(self.Y).pi[self.support]

    @property
    def cdfs1d(self):
        if self._cdfs1d is None:
            data = self.P.data
            indptr = self.P.indptr
            cdfs1d = np.empty(self.P.nnz, dtype=data.dtype)
            for i in range(self.n):
                cdfs1d[indptr[i]:indptr[i+1]] = \
                    data[indptr[i]:indptr[i+1]].cumsum()
            self._cdfs1d = cdfs1d
        return self._cdfs1d

    def simulate_indices(self, ts_length, init, random_state=None):
        """
        Simulate a sample path of state indices.

        Parameters
        ----------
        ts_length : scalar(int)
            Length of the path, including the initial state.

        init : scalar(int)
            Initial state index.

        random_state : int or np.random.Generator, optional

        Returns
        -------
        X : ndarray(int, ndim=1)

        """
        random_state = check_random_state(random_state)
        if not 0 <= init < self.n:
            raise ValueError('index {0} is out of the state space'
                             .format(init))
        X = np.empty(ts_length, dtype=int)
        if ts_length == 0:
            return X
        random_values = random_state.random(size=ts_length-1)
        cdfs1d, indices, indptr = self.cdfs1d, self.P.indices, self.P.indptr
        X[0] = init
        for t in range(ts_length-1):
            lo, hi = indptr[X[t]], indptr[X[t]+1]
            k = np.searchsorted(cdfs1d[lo:hi], random_values[t], side='right')
            X[t+1] = indices[lo + min(k, hi - lo - 1)]
        return X


def transition_kernel(Y, gamma=0.):
    """
    Return the `WalkKernel` of the gamma-lazy face walk on `Y`.

    """
    return WalkKernel(Y, gamma)


WalkStatistics = namedtuple('WalkStatistics',
                            'visits checkpoints tv final_state')
WalkStatistics.__doc__ = """
Summary of a simulated face walk.

visits : ndarray(int) of length C(n, d), visit counts by face rank
    over X_0, ..., X_steps.
checkpoints : ndarray(int), step counts t at which tv was measured.
tv : ndarray(float), total variation distance between the empirical
    distribution of X_0, ..., X_t and the stationary distribution.
final_state : tuple(int), the face X_steps.
"""


def simulate(Y, gamma, start, steps, seed=None, checkpoints=None):
    """
    Run the gamma-lazy face walk on `Y` from the face `start`.

    Parameters
    ----------
    Y : Complex

    gamma : scalar(float)
        Laziness, in [0, 1).

    start : tuple(int)
        Starting (d-1)-face; must have positive co-degree.

    steps : scalar(int)
        Number of transitions.

    seed : int or np.random.Generator, optional

    checkpoints : array_like(int), optional
        Step counts at which to measure the distance to stationarity.
        Defaults to ten geometrically spaced values ending at `steps`.

    Returns
    -------
    stats : WalkStatistics

    """
    if steps < 0:
        raise ValueError('steps must be nonnegative')
    kernel = WalkKernel(Y, gamma)
    X = kernel.simulate_indices(steps + 1, kernel.index_of(start),
                                random_state=seed)

    if checkpoints is None:
        checkpoints = np.unique(np.append(
            np.geomspace(1, max(steps, 1), 10).astype(int), steps))
        checkpoints = checkpoints[checkpoints <= steps]
    checkpoints = np.asarray(checkpoints, dtype=int)
    if checkpoints.size and (checkpoints.min() < 0 or
                             checkpoints.max() > steps):
        raise ValueError('checkpoints must lie in [0, steps]')

    pi = kernel.stationary_distribution
    tv = np.empty(checkpoints.size)
    for i, t in enumerate(checkpoints):
        counts = np.bincount(X[:t+1], minlength=kernel.n)
        tv[i] = 0.5 * np.abs(counts / (t + 1) - pi).sum()

    visits = np.zeros(Y.num_ridges, dtype=np.int64)
    visits[kernel.support] = np.bincount(X, minlength=kernel.n)
    final_state = tuple(Y.ridges(kernel.support[X[-1:]])[0].tolist())
    return WalkStatistics(visits, checkpoints, tv, final_state)
