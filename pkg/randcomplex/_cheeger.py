r"""
Cheeger constant of a d-complex with complete skeleton

.. math::

    h(Y) = \min \frac{n \cdot |F(A_0, \ldots, A_d)|}{\prod_{i=0}^d |A_i|}

where the minimum runs over the partitions of the vertex set into d+1
non-empty blocks and :math:`F(A_0, \ldots, A_d)` is the set of top faces
with exactly one vertex in each block.

"""
from collections import namedtuple

import numpy as np
from sympy.functions.combinatorial.numbers import stirling

from ._exceptions import InstanceTooLargeError


MAX_PARTITIONS = 10**7
_BATCH = 4096


class Partition:
    """
    An ordered partition of {0, ..., n-1} into non-empty blocks.

    Parameters
    ----------
    blocks : iterable of iterables of ints
        The blocks A_0, ..., A_k. Together they must cover
        {0, ..., n-1} exactly once.

    Attributes
    ----------
    blocks : tuple(tuple(int))
        The blocks, each sorted ascending.

    n : scalar(int)
        Number of vertices.

    """

    def __init__(self, blocks):
        blocks = tuple(tuple(sorted(int(v) for v in b)) for b in blocks)
        if not blocks:
            raise ValueError('a partition needs at least one block')
        if any(len(b) == 0 for b in blocks):
            raise ValueError('partition blocks must be non-empty')
        vertices = sorted(v for b in blocks for v in b)
        if vertices != list(range(len(vertices))):
            raise ValueError(
                'blocks must be disjoint and cover 0, ..., n-1'
            )
        self.blocks = blocks
        self.n = len(vertices)

    @classmethod
    def from_labels(cls, labels):
        """
        Build the partition whose block i is {v : labels[v] == i}.

        """
        labels = np.asarray(labels, dtype=np.int64)
        k = int(labels.max()) + 1 if labels.size else 0
        return cls([np.flatnonzero(labels == i) for i in range(k)])

    @property
    def labels(self):
        """Block label of each vertex."""
        out = np.empty(self.n, dtype=np.int64)
        for i, b in enumerate(self.blocks):
            out[list(b)] = i
        return out

    @property
    def sizes(self):
        return np.array([len(b) for b in self.blocks], dtype=np.int64)

    @property
    def num_blocks(self):
        return len(self.blocks)

    def __repr__(self):
        return 'Partition({0})'.format([list(b) for b in self.blocks])

    def __eq__(self, other):
        return isinstance(other, Partition) and self.blocks == other.blocks

    def __hash__(self):
        return hash(self.blocks)


class CheegerResult(namedtuple('CheegerResult',
                               'value witness crossing_count')):
    """
    Attributes
    ----------
    value : scalar(float)
        The score n * crossing_count / prod |A_i| of `witness`.

    witness : Partition

    crossing_count : scalar(int)
        Number of top faces transversal to `witness`.

    """
    __slots__ = ()

    def to_dict(self):
        return {'h': float(self.value),
                'witness': [list(b) for b in self.witness.blocks],
                'crossing': int(self.crossing_count)}


def _check_partition(Y, P):
    if P.n != Y.n:
        raise ValueError(
            'partition covers {0} vertices, complex has {1}'.format(P.n, Y.n)
        )
    if P.num_blocks != Y.d + 1:
        raise ValueError(
            'partition must have d+1 = {0} blocks'.format(Y.d + 1)
        )


def crossing_faces(Y, P):
    """
    Number of top faces of `Y` with exactly one vertex in each block of
    the partition `P` into d+1 blocks.

    """
    _check_partition(Y, P)
    if Y.num_faces == 0:
        return 0
    face_labels = np.sort(P.labels[Y.faces], axis=1)
    return int(np.all(face_labels == np.arange(Y.d + 1), axis=1).sum())


def partition_score(Y, P):
    """
    Return n * |F(A_0, ..., A_d)| / prod |A_i| for the partition `P`.

    """
    return Y.n * crossing_faces(Y, P) / float(np.prod(P.sizes,
                                                      dtype=float))


def partition_count(n, k):
    """
    Number of partitions of an n-set into k non-empty unlabeled blocks,
    the Stirling number of the second kind S(n, k).

    """
    return int(stirling(n, k))


def _extend_strings(block, n, k):
    """
    Append every admissible next label to the prefixes in `block`,
    keeping lexicographic order.

    """
    i = block.shape[1]
    prefix_max = block.max(axis=1).astype(np.int64)
    v = np.arange(k)
    new_max = np.maximum(prefix_max[:, None], v)
    # the labels above new_max must still fit in the remaining positions
    ok = (v <= prefix_max[:, None] + 1) & (k - 1 - new_max <= n - 1 - i)
    rows, labels = np.nonzero(ok)
    out = np.empty((rows.size, i+1), dtype=np.int8)
    out[:, :i] = block[rows]
    out[:, i] = labels
    return out


def _restricted_growth_strings(n, k):
    """
    Generate, in lexicographic order, the restricted growth strings of
    length n with maximum k-1, as int8 arrays of shape (<= _BATCH, n).

    Prefixes are extended one position at a time in blocks of at most
    _BATCH rows, depth first.

    """
    stack = [np.zeros((1, 1), dtype=np.int8)]
    while stack:
        block = stack.pop()
        if block.shape[1] == n:
            yield block
            continue
        children = _extend_strings(block, n, k)
        starts = range(0, children.shape[0], _BATCH)
        stack.extend(children[s:s+_BATCH] for s in reversed(starts))


def cheeger_exact(Y, max_partitions=MAX_PARTITIONS):
    """
    Compute the Cheeger constant h(Y) by enumerating all partitions of
    the vertex set into d+1 non-empty blocks.

    Parameters
    ----------
    Y : Complex

    max_partitions : scalar(int), optional(default=10**7)
        Largest S(n, d+1) that is enumerated.

    Returns
    -------
    result : CheegerResult
        Ties are resolved in favor of the lexicographically first
        restricted growth string.

    Raises
    ------
    InstanceTooLargeError
        If S(n, d+1) exceeds `max_partitions`.

    """
    n, k = Y.n, Y.d + 1
    count = partition_count(n, k)
    if count > max_partitions:
        raise InstanceTooLargeError('S({0}, {1})'.format(n, k), count,
                                    max_partitions)

    target = np.arange(k, dtype=np.int8)
    best_value, best_labels, best_cross = np.inf, None, 0
    for L in _restricted_growth_strings(n, k):
        if Y.num_faces:
            lab = np.sort(L[:, Y.faces], axis=2)
            cross = np.all(lab == target, axis=2).sum(axis=1)
        else:
            cross = np.zeros(L.shape[0], dtype=np.int64)
        sizes = (L[:, :, None] == target).sum(axis=1)
        scores = n * cross / np.prod(sizes, axis=1, dtype=float)
        i = int(np.argmin(scores))
        if scores[i] < best_value:
            best_value = float(scores[i])
            best_labels = L[i].copy()
            best_cross = int(cross[i])

    return CheegerResult(best_value, Partition.from_labels(best_labels),
                         best_cross)


def cheeger_from_min_codegree(Y):
    """
    Upper bound on h(Y) from the partition into the singletons of a
    minimum co-degree (d-1)-face sigma and the remaining n-d vertices.

    Returns
    -------
    result : CheegerResult
        Its value is n * delta(Y) / (n - d).

    """
    r = int(np.argmin(Y.codegree))
    sigma = Y.ridges(np.array([r]))[0]
    rest = np.setdiff1d(np.arange(Y.n), sigma)
    P = Partition([[v] for v in sigma] + [rest])
    cross = crossing_faces(Y, P)
    return CheegerResult(Y.n * cross / (Y.n - Y.d), P, cross)
