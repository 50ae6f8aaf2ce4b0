r"""
Conductance of the face walk.

For a set S of (d-1)-faces with positive co-degree,

.. math::

    Q(S, \bar S) = \frac{1}{d(d+1) |Y^{(d)}|}
        \sum_{\sigma \in S} \sum_{\sigma' \in \bar S, \sigma' \sim \sigma} 1

    \Phi_Y(S) = \frac{Q(S, \bar S)}{\pi(S) \pi(\bar S)}

and the conductance is the minimum of :math:`\Phi_Y(S)` over the sets
with :math:`0 < \pi(S) \le 1/2`. A top face with k of its d+1 facets in
S contributes k(d+1-k) crossing pairs, which is how the cut is counted
here.

The conductance is bounded below by the exit ratio of tightly connected
sets,

.. math::

    \Phi_Y \geq \frac{1}{d(d+1)} \min_S
        \frac{|\partial^+ S \setminus B_S|}{|\partial^+ S|}

which `conductance_estimate` samples.

"""
from collections import namedtuple

import numpy as np
from scipy.sparse import csgraph

from .._exceptions import InstanceTooLargeError
from ..util import check_random_state, face_rank
from .core import face_adjacency


MAX_EXACT_SUPPORT = 25
TIE_TOL = 1e-12
_CHUNK = 1 << 14


class ConductanceResult(namedtuple('ConductanceResult',
                                   'phi argmin method samples ratio')):
    """
    Attributes
    ----------
    phi : scalar(float)
        Exact conductance, or the lower estimate.

    argmin : list(tuple(int))
        The set of (d-1)-faces attaining `phi`.

    method : str
        'exact' or 'estimate'.

    samples : scalar(int)
        Number of sets evaluated.

    ratio : scalar(float) or None
        For estimates, the smallest sampled exit ratio.

    """
    __slots__ = ()

    def to_dict(self):
        out = {'phi': float(self.phi),
               'argmin': [list(f) for f in self.argmin],
               'method': self.method,
               'samples': int(self.samples)}
        if self.ratio is not None:
            out['ratio'] = float(self.ratio)
        return out


def _as_ranks(Y, S):
    """
    Return the sorted ranks of the (d-1)-faces in `S`, checking that
    every face has positive co-degree.

    """
    S = [tuple(sorted(int(v) for v in s)) for s in S]
    if not S:
        return np.empty(0, dtype=np.int64)
    arr = np.array(S, dtype=np.int64)
    if arr.ndim != 2 or arr.shape[1] != Y.d:
        raise ValueError('S must contain (d-1)-faces with d vertices')
    if arr.min() < 0 or arr.max() >= Y.n:
        raise ValueError('S contains a vertex outside [0, n)')
    ranks = np.unique(face_rank(arr, Y.n))
    if np.any(Y.codegree[ranks] == 0):
        raise ValueError('S contains a face of co-degree 0')
    return ranks


def _facet_counts(Y, ranks):
    """Number of facets in S of each top face."""
    return np.isin(Y.facet_ranks, ranks).sum(axis=1)


def flow_Q(Y, S):
    """
    Return the normalized cut Q(S, complement of S) of the face walk on
    `Y`.

    Parameters
    ----------
    Y : Complex

    S : iterable of tuple(int)
        (d-1)-faces of positive co-degree.

    Returns
    -------
    Q : scalar(float)

    """
    if Y.num_faces == 0:
        raise ValueError('the complex has no top faces')
    k = _facet_counts(Y, _as_ranks(Y, S))
    cut = int(np.sum(k * (Y.d + 1 - k)))
    return cut / (Y.d * (Y.d + 1) * Y.num_faces)


def pi_set(Y, S):
    """
    Stationary mass of the set of (d-1)-faces `S`.

    """
    if Y.num_faces == 0:
        raise ValueError('the complex has no top faces')
    ranks = _as_ranks(Y, S)
    return Y.codegree[ranks].sum() / ((Y.d + 1) * Y.num_faces)


def phi_set(Y, S):
    """
    Return Phi_Y(S) = Q(S, S') / (pi(S) pi(S')) with S' the complement
    of `S` in the support.

    """
    ranks = _as_ranks(Y, S)
    mass = int(Y.codegree[ranks].sum())
    total = (Y.d + 1) * Y.num_faces
    if mass == 0 or mass == total:
        raise ValueError('pi(S) must lie strictly between 0 and 1')
    pi = mass / total
    return flow_Q(Y, S) / (pi * (1 - pi))


def exit_ratio(Y, S):
    r"""
    Realized exit ratio of the set of (d-1)-faces `S`: the fraction of
    top faces meeting S that are not entirely bounded by S,

    .. math::

        \frac{|(\partial^+ S \setminus B_S) \cap Y^{(d)}|}
             {|\partial^+ S \cap Y^{(d)}|}

    """
    k = _facet_counts(Y, _as_ranks(Y, S))
    touching = int(np.sum(k > 0))
    if touching == 0:
        raise ValueError('S meets no top face')
    interior = int(np.sum(k == Y.d + 1))
    return (touching - interior) / touching


def _ridge_tuples(Y, ranks):
    return [tuple(f) for f in Y.ridges(np.asarray(ranks)).tolist()]


def conductance_exact(Y, max_support=MAX_EXACT_SUPPORT):
    """
    Compute the conductance of the face walk on `Y` by enumerating all
    subsets of the support.

    Parameters
    ----------
    Y : Complex

    max_support : scalar(int), optional(default=25)
        Largest support size that is enumerated.

    Returns
    -------
    result : ConductanceResult
        Among the sets within 1e-12 of the minimum, `argmin` is the one
        whose sorted list of support indices is lexicographically
        smallest.

    Raises
    ------
    InstanceTooLargeError
        If the support has more than `max_support` faces.

    """
    if Y.num_faces == 0:
        raise ValueError('the complex has no top faces')
    support = np.flatnonzero(Y.codegree > 0)
    k = support.size
    if k > max_support:
        raise InstanceTooLargeError('support size', k, max_support)

    index = np.full(Y.num_ridges, -1, dtype=np.int64)
    index[support] = np.arange(k)
    facet_idx = index[Y.facet_ranks]
    deg = Y.codegree[support]
    d, m = Y.d, Y.num_faces
    total = (d + 1) * m
    bit_values = np.int64(1) << np.arange(k, dtype=np.int64)

    best = np.inf
    cand_masks, cand_vals = np.empty(0, dtype=np.int64), np.empty(0)
    admissible = 0
    for start in range(1, 1 << k, _CHUNK):
        masks = np.arange(start, min(start + _CHUNK, 1 << k),
                          dtype=np.int64)
        bits = (masks[:, None] & bit_values) != 0
        mass = bits @ deg
        ok = 2 * mass <= total
        if not ok.any():
            continue
        masks, bits, mass = masks[ok], bits[ok], mass[ok]
        admissible += masks.size
        counts = bits[:, facet_idx].sum(axis=2)
        cut = (counts * (d + 1 - counts)).sum(axis=1)
        pi = mass / total
        phi = cut / (d * total) / (pi * (1 - pi))

        low = phi.min()
        if low < best - TIE_TOL:
            best = low
            keep = phi <= best + TIE_TOL
            cand_masks, cand_vals = masks[keep], phi[keep]
        elif low <= best + TIE_TOL:
            best = min(best, low)
            keep = phi <= best + TIE_TOL
            cand_masks = np.concatenate([cand_masks, masks[keep]])
            cand_vals = np.concatenate([cand_vals, phi[keep]])
            still = cand_vals <= best + TIE_TOL
            cand_masks, cand_vals = cand_masks[still], cand_vals[still]

    if admissible == 0:
        raise ValueError('no set of faces has 0 < pi(S) <= 1/2')

    def members(mask):
        return [i for i in range(k) if (int(mask) >> i) & 1]

    winner = min(cand_masks.tolist(), key=members)
    phi = float(cand_vals[cand_masks.tolist().index(winner)])
    argmin = _ridge_tuples(Y, support[members(winner)])
    return ConductanceResult(phi, argmin, 'exact', admissible, None)


def _grow_tight_set(adj, codegree, start, target, max_mass, rng):
    """
    Grow a tightly connected set from `start` by adding uniformly chosen
    frontier faces until it has `target` faces or no face can be added
    without exceeding `max_mass`.

    """
    S = [start]
    in_S = {start}
    mass = codegree[start]
    frontier = set(adj.indices[adj.indptr[start]:adj.indptr[start+1]])
    while len(S) < target and frontier:
        x = rng.choice(sorted(frontier))
        frontier.discard(x)
        if mass + codegree[x] > max_mass:
            continue
        S.append(x)
        in_S.add(x)
        mass += codegree[x]
        for y in adj.indices[adj.indptr[x]:adj.indptr[x+1]]:
            if y not in in_S:
                frontier.add(y)
    return np.array(sorted(S), dtype=np.int64)


def conductance_estimate(Y, trials=200, random_state=None):
    """
    Lower estimate of the conductance from the exit ratios of randomly
    grown tightly connected sets.

    Every maximal tightly connected component of the support with
    pi <= 1/2 is evaluated first; such a component has exit ratio 0, so
    a disconnected support gives 0. Each trial then starts from a
    uniformly chosen face of the support, draws a target size
    log-uniformly between 1 and the support size, and grows the set by
    breadth-first exploration with uniform frontier choices while
    keeping pi(S) <= 1/2.

    Parameters
    ----------
    Y : Complex

    trials : scalar(int), optional(default=200)
        Number of randomly grown sets; the components are evaluated in
        addition.

    random_state : int or np.random.Generator, optional

    Returns
    -------
    result : ConductanceResult
        `phi` is the smallest sampled ratio divided by d(d+1) and
        `ratio` the smallest sampled ratio itself.

    """
    if Y.num_faces == 0:
        raise ValueError('the complex has no top faces')
    if trials < 1:
        raise ValueError('trials must be a positive integer')
    rng = check_random_state(random_state)
    support = np.flatnonzero(Y.codegree > 0)
    adj = face_adjacency(Y)
    total = (Y.d + 1) * Y.num_faces
    max_mass = total / 2
    max_size = support.size

    def candidates():
        sub = adj[support][:, support]
        num, labels = csgraph.connected_components(sub, directed=False)
        for c in range(num):
            S = support[labels == c]
            if Y.codegree[S].sum() <= max_mass:
                yield S
        for _ in range(trials):
            start = int(rng.choice(support))
            if Y.codegree[start] > max_mass:
                continue
            target = int(np.exp(rng.uniform(0, np.log(max_size + 1))))
            yield _grow_tight_set(adj, Y.codegree, start, max(target, 1),
                                  max_mass, rng)

    best_ratio, best_set, samples = np.inf, None, 0
    for S in candidates():
        k = _facet_counts(Y, S)
        touching = np.sum(k > 0)
        ratio = (touching - np.sum(k == Y.d + 1)) / touching
        samples += 1
        if ratio < best_ratio:
            best_ratio, best_set = float(ratio), S

    if best_set is None:
        raise ValueError('no face has stationary mass at most 1/2')
    return ConductanceResult(best_ratio / (Y.d * (Y.d + 1)),
                             _ridge_tuples(Y, best_set), 'estimate',
                             samples, best_ratio)
