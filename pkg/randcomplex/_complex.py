r"""
d-dimensional simplicial complexes on the vertex set {0, ..., n-1} with
a complete (d-1)-skeleton.

Every face of dimension at most d-1 is implicitly present, so a complex
is determined by n, d and its set of d-faces (the *top faces*). The
:math:`\binom{n}{d}` potential (d-1)-faces are addressed by their
colexicographic rank, which makes the co-degree index a dense array.

The Linial-Meshulam model :math:`Y(n, p; d)` includes each of the
:math:`\binom{n}{d+1}` potential top faces independently with
probability p. `generate` draws the coin of each subset from a
counter-based stream keyed by the seed and positioned by the subset
rank, so a complex depends on (n, d, p, seed) only.

"""
import json
import numbers

import numpy as np
from scipy import sparse
from scipy.sparse import csgraph
from scipy.special import comb

from .util import face_rank, face_unrank, subset_uniforms
from .util.random import SUBSET_CHUNK


def _as_face(face, n, size):
    """
    Return `face` as an ascending tuple of ints, checking that it has
    `size` distinct vertices in [0, n).

    """
    try:
        vertices = sorted(int(v) for v in face)
    except TypeError:
        raise ValueError(
            'face must be an iterable of ints: {0!r}'.format(face))
    if len(vertices) != size:
        raise ValueError(
            'face {0} must have {1} vertices'.format(tuple(vertices), size)
        )
    if len(set(vertices)) != size:
        raise ValueError(
            'face {0} has repeated vertices'.format(tuple(vertices))
        )
    if size and (vertices[0] < 0 or vertices[-1] >= n):
        raise ValueError(
            'face {0} has a vertex outside [0, {1})'.format(
                tuple(vertices), n)
        )
    return tuple(vertices)


class LinkGraph:
    """
    Link graph of a (d-2)-face tau of a d-complex: the graph on the
    n-d+1 vertices outside tau in which u, v are adjacent if tau + {u, v}
    is a top face.

    Parameters
    ----------
    tau : tuple(int)
        The (d-2)-face.

    vertices : array_like(int, ndim=1)
        Vertices outside `tau`, ascending.

    edges : array_like(int, ndim=2)
        Array of shape (k, 2) of vertex pairs (u, v) with u < v.

    Attributes
    ----------
    adjacency_matrix : scipy.sparse.csr_matrix
        Symmetric 0/1 adjacency matrix indexed by position in `vertices`.

    degrees : ndarray(int, ndim=1)
        Vertex degrees, in the order of `vertices`.

    laplacian : ndarray(float, ndim=2)
        Combinatorial graph Laplacian D - A.

    """

    def __init__(self, tau, vertices, edges):
        self.tau = tuple(tau)
        self.vertices = np.asarray(vertices, dtype=np.int64)
        self.edges = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
        self._adjacency = None

    def __repr__(self):
        return 'LinkGraph of {0}: {1} vertices, {2} edges'.format(
            self.tau, self.num_vertices, self.num_edges)

    @property
    def num_vertices(self):
        return self.vertices.shape[0]

    @property
    def num_edges(self):
        return self.edges.shape[0]

    @property
    def adjacency_matrix(self):
        if self._adjacency is None:
            m = self.num_vertices
            pos = np.searchsorted(self.vertices, self.edges)
            rows = np.concatenate([pos[:, 0], pos[:, 1]])
            cols = np.concatenate([pos[:, 1], pos[:, 0]])
            data = np.ones(rows.shape[0])
            self._adjacency = sparse.csr_matrix((data, (rows, cols)),
                                                shape=(m, m))
        return self._adjacency

    @property
    def degrees(self):
        return np.asarray(self.adjacency_matrix.sum(axis=1)).ravel() \
            .astype(np.int64)

    @property
    def laplacian(self):
        return csgraph.laplacian(self.adjacency_matrix.toarray())


class Complex:
    r"""
    A d-dimensional simplicial complex on n vertices with complete
    (d-1)-skeleton.

    Parameters
    ----------
    n : scalar(int)
        Number of vertices.

    d : scalar(int)
        Dimension, d >= 1 and d < n.

    faces : iterable of iterables of ints
        The top faces, each a (d+1)-subset of {0, ..., n-1}. Vertex
        order within a face is irrelevant and duplicate faces are
        merged.

    Attributes
    ----------
    faces : ndarray(int64, ndim=2)
        Array of shape (m, d+1); rows are ascending vertex lists ordered
        by colexicographic rank.

    face_ranks : ndarray(int64, ndim=1)
        Colexicographic ranks of the rows of `faces` (ascending).

    facet_ranks : ndarray(int64, ndim=2)
        Array of shape (m, d+1); entry (k, i) is the rank of the
        (d-1)-face obtained by removing vertex i from top face k.

    codegree : ndarray(int64, ndim=1)
        Array of length C(n, d); entry r is the co-degree of the
        (d-1)-face of rank r, i.e. the number of top faces containing it.

    Notes
    -----
    Instances are immutable after construction and may be shared
    read-only between workers.

    """

    def __init__(self, n, d, faces=()):
        n, d = _check_dims(n, d)
        faces = [_as_face(f, n, d+1) for f in faces]
        if faces:
            arr = np.array(faces, dtype=np.int64)
        else:
            arr = np.empty((0, d+1), dtype=np.int64)
        ranks = face_rank(arr, n)
        ranks, idx = np.unique(ranks, return_index=True)
        self._setup(n, d, arr[idx], ranks)

    @classmethod
    def _from_ranks(cls, n, d, ranks):
        """Build a complex from ascending, distinct top-face ranks."""
        Y = cls.__new__(cls)
        ranks = np.asarray(ranks, dtype=np.int64)
        Y._setup(n, d, face_unrank(ranks, n, d+1), ranks)
        return Y

    def _setup(self, n, d, faces, ranks):
        self.n = n
        self.d = d
        self.faces = faces
        self.face_ranks = ranks
        self.faces.flags.writeable = False
        self.face_ranks.flags.writeable = False

        facet_ranks = np.empty((faces.shape[0], d+1), dtype=np.int64)
        for i in range(d+1):
            facet_ranks[:, i] = face_rank(np.delete(faces, i, axis=1), n)
        self.facet_ranks = facet_ranks
        self.facet_ranks.flags.writeable = False

        self.num_ridges = comb(n, d, exact=True)
        self.codegree = np.bincount(facet_ranks.ravel(),
                                    minlength=self.num_ridges)
        self.codegree = self.codegree.astype(np.int64)
        self.codegree.flags.writeable = False
        self._top_faces = None

    def __repr__(self):
        msg = '{0}-complex on {1} vertices with {2} top faces'
        return msg.format(self.d, self.n, self.num_faces)

    def __str__(self):
        return self.__repr__()

    @property
    def num_faces(self):
        return self.faces.shape[0]

    @property
    def top_faces(self):
        if self._top_faces is None:
            self._top_faces = frozenset(map(tuple, self.faces.tolist()))
        return self._top_faces

    @property
    def min_codegree(self):
        return int(self.codegree.min())

    def ridge_rank(self, sigma):
        """
        Return the colexicographic rank of the (d-1)-face `sigma`.

        """
        sigma = _as_face(sigma, self.n, self.d)
        return int(face_rank(np.array([sigma]), self.n)[0])

    def ridges(self, ranks):
        """
        Return the (d-1)-faces with the given colexicographic ranks.

        """
        return face_unrank(ranks, self.n, self.d)

    def codegree_of(self, sigma):
        """
        Return the co-degree of the (d-1)-face `sigma`.

        """
        return int(self.codegree[self.ridge_rank(sigma)])

    def contains(self, face):
        """
        Return True if the (d+1)-subset `face` is a top face.

        """
        face = _as_face(face, self.n, self.d+1)
        r = face_rank(np.array([face]), self.n)[0]
        i = np.searchsorted(self.face_ranks, r)
        return bool(i < self.num_faces and self.face_ranks[i] == r)

    def cofaces(self, sigma):
        """
        Return the top faces containing the (d-1)-face `sigma`.

        Returns
        -------
        faces : ndarray(int64, ndim=2)
            Array of shape (codegree(sigma), d+1).

        """
        r = self.ridge_rank(sigma)
        rows = np.flatnonzero((self.facet_ranks == r).any(axis=1))
        return self.faces[rows]

    def neighbors(self, sigma):
        """
        Return the (d-1)-faces sharing a top face with `sigma`.

        Returns
        -------
        nbrs : set(tuple(int))
            Set of size d * codegree(sigma).

        """
        sigma = _as_face(sigma, self.n, self.d)
        nbrs = set()
        for rho in self.cofaces(sigma).tolist():
            for i in range(self.d+1):
                facet = tuple(rho[:i] + rho[i+1:])
                if facet != sigma:
                    nbrs.add(facet)
        return nbrs

    def link_graph(self, tau):
        """
        Return the link graph of the (d-2)-face `tau`.

        For d = 1, `tau` is the empty face and the link graph is the
        1-complex itself viewed as a graph.

        """
        tau = _as_face(tau, self.n, self.d-1)
        tau_arr = np.array(tau, dtype=np.int64)
        mask = np.ones(self.num_faces, dtype=bool)
        for t in tau:
            mask &= (self.faces == t).any(axis=1)
        rows = self.faces[mask]
        keep = ~np.isin(rows, tau_arr)
        edges = rows[keep].reshape(-1, 2)
        vertices = np.setdiff1d(np.arange(self.n), tau_arr)
        return LinkGraph(tau, vertices, edges)


def _check_dims(n, d):
    if not isinstance(n, (numbers.Integral, np.integer)) or \
            not isinstance(d, (numbers.Integral, np.integer)):
        raise ValueError('n and d must be integers')
    n, d = int(n), int(d)
    if d < 1:
        raise ValueError('d must be at least 1')
    if n <= d:
        raise ValueError(
            'n must be greater than d (n={0}, d={1})'.format(n, d))
    return n, d


def generate(n, d, p, seed):
    """
    Sample the Linial-Meshulam complex Y(n, p; d).

    Parameters
    ----------
    n : scalar(int)
        Number of vertices.

    d : scalar(int)
        Dimension, 1 <= d < n.

    p : scalar(float)
        Probability in [0, 1] with which each (d+1)-subset is a face.

    seed : scalar(int)
        64-bit seed. The coin of the subset of rank r is a function of
        (seed, r) only.

    Returns
    -------
    Y : Complex

    Examples
    --------
    >>> Y = generate(5, 2, 1.0, seed=0)
    >>> Y.num_faces
    10

    """
    n, d = _check_dims(n, d)
    if not 0 <= p <= 1:
        raise ValueError('p must lie in [0, 1]')
    total = comb(n, d+1, exact=True)
    selected = []
    for start in range(0, total, SUBSET_CHUNK):
        stop = min(start + SUBSET_CHUNK, total)
        u = subset_uniforms(seed, start, stop)
        selected.append(np.flatnonzero(u < p) + start)
    if selected:
        ranks = np.concatenate(selected)
    else:
        ranks = np.empty(0, dtype=np.int64)
    return Complex._from_ranks(n, d, ranks)


def from_faces(n, d, faces):
    """
    Build a complex from an explicit list of top faces. Duplicates are
    merged; a face with repeated or out-of-range vertices raises
    ValueError.

    """
    return Complex(n, d, faces)


def min_codegree(Y):
    """
    Return the minimum co-degree over all C(n, d) potential (d-1)-faces,
    including those of co-degree 0.

    """
    return Y.min_codegree


def link_graph(Y, tau):
    """
    Return the link graph of the (d-2)-face `tau` of `Y`.

    """
    return Y.link_graph(tau)


def neighbors(Y, sigma):
    """
    Return the set of (d-1)-faces adjacent to `sigma` through a top face.

    """
    return Y.neighbors(sigma)


def save_complex(Y, path):
    """
    Write `Y` as JSON: {"n": int, "d": int, "faces": [[int, ...], ...]}.

    """
    data = {'n': Y.n, 'd': Y.d, 'faces': Y.faces.tolist()}
    try:
        with open(path, 'w') as f:
            json.dump(data, f)
    except OSError as e:
        raise OSError('cannot write complex to {0}: {1}'.format(path, e))


def load_complex(path):
    """
    Read a complex written by `save_complex`. Faces must be lists of
    strictly increasing 0-based vertices.

    """
    try:
        with open(path) as f:
            data = json.load(f)
    except OSError as e:
        raise OSError('cannot read complex from {0}: {1}'.format(path, e))
    try:
        n, d, faces = data['n'], data['d'], data['faces']
    except (KeyError, TypeError):
        raise ValueError('{0}: expected keys "n", "d", "faces"'.format(path))
    for face in faces:
        if not isinstance(face, list) or \
                any(not isinstance(v, int) for v in face) or \
                any(a >= b for a, b in zip(face, face[1:])):
            raise ValueError('{0}: malformed face {1!r}'.format(path, face))
    return Complex(n, d, faces)
