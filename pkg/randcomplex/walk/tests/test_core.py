"""
Tests for walk/core.py

"""
import warnings

import numpy as np
import pytest
from numpy.testing import (
    assert_allclose, assert_array_equal, assert_raises, assert_
)

from randcomplex import generate, from_faces
from randcomplex.walk import (
    WalkKernel, face_adjacency, transition_kernel, stationary, simulate
)


def two_triangles():
    return from_faces(4, 2, [(0, 1, 2), (0, 1, 3)])


def _row(kernel, sigma):
    Y = kernel.Y
    i = kernel.index_of(sigma)
    row = kernel.P.getrow(i).toarray().ravel()
    faces = Y.ridges(kernel.support).tolist()
    return {tuple(f): v for f, v in zip(faces, row) if v != 0}


class TestKernel:
    def setup_method(self):
        with pytest.warns(UserWarning, match='co-degree 0'):
            self.kernel = transition_kernel(two_triangles(), 0.)

    def test_support(self):
        assert_(self.kernel.n == 5)
        assert_raises(ValueError, self.kernel.index_of, (2, 3))

    def test_rows(self):
        assert_(_row(self.kernel, (0, 2)) == {(0, 1): 0.5, (1, 2): 0.5})
        row = _row(self.kernel, (0, 1))
        assert_(set(row) == {(0, 2), (1, 2), (0, 3), (1, 3)})
        assert_allclose(list(row.values()), 0.25)

    def test_lazy(self):
        with pytest.warns(UserWarning):
            lazy = WalkKernel(two_triangles(), 0.5)
        assert_allclose(lazy.P.diagonal(), 0.5)
        off = lazy.P.toarray() - 0.5 * np.eye(lazy.n)
        assert_allclose(off, 0.5 * self.kernel.P.toarray())

    def test_invalid(self):
        Y = generate(5, 2, 1., seed=0)
        assert_raises(ValueError, WalkKernel, Y, 1.)
        assert_raises(ValueError, WalkKernel, Y, -0.1)
        assert_raises(ValueError, WalkKernel, generate(5, 2, 0., 0), 0.)

    def test_no_warning_on_full_support(self):
        with warnings.catch_warnings():
            warnings.simplefilter('error')
            WalkKernel(generate(5, 2, 1., seed=0))


def test_face_adjacency():
    Y = two_triangles()
    A = face_adjacency(Y)
    assert_(A.shape == (6, 6))
    assert_((A != A.T).nnz == 0)
    assert_array_equal(np.asarray(A.sum(axis=1)).ravel(),
                       Y.d * Y.codegree)


class TestStationary:
    def test_two_triangles(self):
        Y = two_triangles()
        pi = stationary(Y).pi
        assert_allclose(pi[Y.ridge_rank((0, 1))], 2 / 6)
        assert_allclose(pi[Y.ridge_rank((0, 2))], 1 / 6)
        assert_(pi[Y.ridge_rank((2, 3))] == 0)

    def test_complete(self):
        pi = stationary(generate(6, 3, 1., seed=0)).pi
        assert_allclose(pi, 1 / 20)

    def test_empty(self):
        assert_raises(ValueError, stationary, generate(5, 2, 0., 0))

    @pytest.mark.filterwarnings("ignore:.*co-degree 0")
    def test_invariance(self):
        for k in range(30):
            gamma = (0., 0.3, 0.7)[k % 3]
            Y = generate(6 + k % 4, 2 + k % 2, 0.6, seed=k)
            if Y.num_faces == 0:
                continue
            kernel = WalkKernel(Y, gamma)
            assert_allclose(np.asarray(kernel.P.sum(axis=1)).ravel(), 1.,
                            atol=1e-12)
            pi = kernel.stationary_distribution
            assert_allclose(pi @ kernel.P, pi, atol=1e-12)
            assert_allclose(pi.sum(), 1., atol=1e-12)


class TestSimulate:
    def test_zero_steps(self):
        Y = generate(5, 2, 1., seed=0)
        stats = simulate(Y, 0., (0, 1), 0, seed=0)
        assert_(stats.visits.sum() == 1)
        assert_(stats.visits[Y.ridge_rank((0, 1))] == 1)
        assert_array_equal(stats.checkpoints, [0])
        assert_allclose(stats.tv, [0.9])
        assert_(stats.final_state == (0, 1))

    @pytest.mark.filterwarnings("ignore:.*co-degree 0")
    def test_reproducible(self):
        Y = generate(6, 2, 0.7, seed=1)
        start = tuple(Y.faces[0, :2])
        a = simulate(Y, 0.2, start, 500, seed=9)
        b = simulate(Y, 0.2, start, 500, seed=9)
        assert_array_equal(a.visits, b.visits)
        assert_(a.final_state == b.final_state)

    def test_complete_mixing(self):
        Y = generate(5, 2, 1., seed=0)
        stats = simulate(Y, 0., (0, 1), 10**5, seed=1)
        assert_(stats.tv[-1] < 0.02)
        assert_(stats.checkpoints[-1] == 10**5)
        assert_(stats.visits.sum() == 10**5 + 1)

    @pytest.mark.filterwarnings("ignore:.*co-degree 0")
    def test_two_triangles_two_seeds(self):
        Y = two_triangles()
        a = simulate(Y, 0., (0, 1), 10**5, seed=1)
        b = simulate(Y, 0., (0, 1), 10**5, seed=2)
        assert_(not np.array_equal(a.visits, b.visits))
        assert_(a.tv[-1] < 0.05 and b.tv[-1] < 0.05)
        assert_(a.visits[Y.ridge_rank((2, 3))] == 0)

    @pytest.mark.filterwarnings("ignore:.*co-degree 0")
    def test_bad_start(self):
        assert_raises(ValueError, simulate, two_triangles(), 0., (2, 3), 10)

    def test_bad_checkpoints(self):
        Y = generate(5, 2, 1., seed=0)
        assert_raises(ValueError, simulate, Y, 0., (0, 1), 10, 0, [11])
        assert_raises(ValueError, simulate, Y, 0., (0, 1), -1)
