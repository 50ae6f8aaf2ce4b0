"""
Tests for walk/conductance.py

"""
import itertools

import numpy as np
import pytest
from numpy.testing import assert_allclose, assert_raises, assert_

from randcomplex import generate, from_faces, edge_probability
from randcomplex import InstanceTooLargeError
from randcomplex.walk import (
    flow_Q, pi_set, phi_set, exit_ratio, conductance_exact,
    conductance_estimate
)


def two_triangles():
    return from_faces(4, 2, [(0, 1, 2), (0, 1, 3)])


def support_faces(Y):
    return [tuple(f) for f in Y.ridges(np.flatnonzero(Y.codegree)).tolist()]


def reenumerate(Y):
    """Minimum of phi_set over all subsets with 0 < pi(S) <= 1/2."""
    faces = support_faces(Y)
    best = np.inf
    for size in range(1, len(faces)):
        for S in itertools.combinations(faces, size):
            if pi_set(Y, S) <= 0.5:
                best = min(best, phi_set(Y, S))
    return best


class TestSetFunctions:
    def setup_method(self):
        self.Y = two_triangles()

    def test_flow(self):
        assert_allclose(flow_Q(self.Y, [(0, 2)]), 1 / 6)
        assert_(flow_Q(self.Y, support_faces(self.Y)) == 0)

    def test_flow_symmetric(self):
        Y = generate(7, 2, 0.6, seed=3)
        faces = support_faces(Y)
        rng = np.random.default_rng(0)
        for _ in range(10):
            mask = rng.random(len(faces)) < 0.5
            S = [f for f, m in zip(faces, mask) if m]
            T = [f for f, m in zip(faces, mask) if not m]
            assert_allclose(flow_Q(Y, S), flow_Q(Y, T), atol=1e-12)

    def test_pi(self):
        assert_allclose(pi_set(self.Y, [(0, 2)]), 1 / 6)
        assert_allclose(pi_set(self.Y, [(0, 1), (1, 3)]), 1 / 2)

    def test_phi(self):
        assert_allclose(phi_set(self.Y, [(2, 0)]), 6 / 5)
        rest = [f for f in support_faces(self.Y) if f != (0, 2)]
        assert_allclose(phi_set(self.Y, rest), 6 / 5)

    def test_phi_brute_force(self):
        Y = generate(4, 2, 1., seed=0)
        # each of the 2 triangles through (0, 1) has 2 crossing pairs
        Q = 4 / (2 * 3 * 4)
        pi = 1 / 6
        assert_allclose(phi_set(Y, [(0, 1)]), Q / (pi * (1 - pi)),
                        atol=1e-12)

    def test_invalid(self):
        assert_raises(ValueError, phi_set, self.Y, [])
        assert_raises(ValueError, phi_set, self.Y, support_faces(self.Y))
        assert_raises(ValueError, flow_Q, self.Y, [(2, 3)])
        assert_raises(ValueError, flow_Q, self.Y, [(0, 1, 2)])
        assert_raises(ValueError, pi_set, generate(5, 2, 0., 0), [])

    def test_exit_ratio(self):
        Y = generate(5, 2, 1., seed=0)
        assert_(exit_ratio(Y, [(0, 1)]) == 1)
        # S bounds the triangle (0, 1, 2) and touches 7 triangles
        assert_allclose(exit_ratio(Y, [(0, 1), (0, 2), (1, 2)]), 6 / 7)


class TestExact:
    def test_two_triangles(self):
        Y = two_triangles()
        res = conductance_exact(Y)
        assert_allclose(res.phi, reenumerate(Y), atol=1e-12)
        assert_allclose(res.phi, phi_set(Y, res.argmin), atol=1e-12)
        assert_(pi_set(Y, res.argmin) <= 0.5)
        assert_(res.method == 'exact')
        assert_(res.ratio is None)

    def test_complete_positive(self):
        assert_(conductance_exact(generate(4, 2, 1., seed=0)).phi > 0)

    def test_deterministic_argmin(self):
        Y = generate(6, 2, 0.5, seed=4)
        runs = [conductance_exact(Y) for _ in range(5)]
        assert_(all(r.argmin == runs[0].argmin for r in runs))
        assert_(all(r.phi == runs[0].phi for r in runs))

    def test_too_large(self):
        Y = generate(8, 2, 1., seed=0)
        with pytest.raises(InstanceTooLargeError) as e:
            conductance_exact(Y)
        assert_(e.value.size == 28)

    def test_empty(self):
        assert_raises(ValueError, conductance_exact, generate(5, 2, 0., 0))

    def test_to_dict(self):
        data = conductance_exact(two_triangles()).to_dict()
        assert_(set(data) == {'phi', 'argmin', 'method', 'samples'})
        assert_(data['method'] == 'exact')

    @pytest.mark.slow
    def test_reenumeration(self):
        checked = 0
        for seed in range(40):
            Y = generate(6, 2, 0.5, seed)
            if Y.num_faces == 0 or np.count_nonzero(Y.codegree) > 15:
                continue
            assert_allclose(conductance_exact(Y).phi, reenumerate(Y),
                            atol=1e-12)
            checked += 1
            if checked == 10:
                break
        assert_(checked == 10)


class TestEstimate:
    def test_complete(self):
        Y = generate(5, 2, 1., seed=0)
        res = conductance_estimate(Y, trials=50, random_state=0)
        assert_(res.method == 'estimate')
        assert_(res.samples == 50)
        assert_(0 < res.ratio <= 1)
        assert_allclose(res.phi, res.ratio / 6)
        assert_allclose(exit_ratio(Y, res.argmin), res.ratio)

    def test_sets_are_admissible(self):
        Y = generate(7, 2, 0.6, seed=2)
        res = conductance_estimate(Y, trials=100, random_state=1)
        assert_(pi_set(Y, res.argmin) <= 0.5)

    def test_below_exact(self):
        for seed in range(10):
            Y = generate(6, 2, 0.5, seed)
            if Y.num_faces == 0:
                continue
            est = conductance_estimate(Y, trials=300, random_state=seed)
            assert_(est.phi <= conductance_exact(Y).phi + 1e-12)

    def test_below_exact_sparse(self):
        Y = generate(6, 2, 0.3, seed=166)
        exact = conductance_exact(Y).phi
        est = conductance_estimate(Y, trials=50, random_state=0)
        assert_(est.phi <= exact + 1e-12)
        if exact == 0:
            assert_(est.phi == 0)

    def test_closed_component(self):
        strip = [(i, i+1, i+2) for i in range(8)]
        block = list(itertools.combinations(range(10, 16), 3))
        Y = from_faces(16, 2, strip + block)
        est = conductance_estimate(Y, trials=5, random_state=0)
        assert_(est.phi == 0)
        assert_(est.ratio == 0)
        faces = est.argmin
        assert_(pi_set(Y, faces) <= 0.5)
        assert_(phi_set(Y, faces) == 0)

    def test_reproducible(self):
        Y = generate(8, 2, 0.5, seed=1)
        a = conductance_estimate(Y, trials=40, random_state=5)
        b = conductance_estimate(Y, trials=40, random_state=5)
        assert_(a == b)

    def test_invalid(self):
        assert_raises(ValueError, conductance_estimate,
                      generate(5, 2, 0., 0))
        assert_raises(ValueError, conductance_estimate, two_triangles(), 0)

    def test_to_dict(self):
        data = conductance_estimate(two_triangles(), trials=5,
                                    random_state=0).to_dict()
        assert_('ratio' in data)

    @pytest.mark.slow
    def test_positive_on_random_complexes(self):
        n = 40
        p = edge_probability(n, 2, 1.)
        for seed in range(30):
            Y = generate(n, 2, p, seed)
            res = conductance_estimate(Y, trials=200, random_state=seed)
            assert_(res.ratio > 0)
            assert_(res.phi > 0.01)

    @pytest.mark.slow
    def test_tight_sets_exit(self):
        n = 30
        p = edge_probability(n, 2, 1.)
        for seed in range(30):
            Y = generate(n, 2, p, seed)
            res = conductance_estimate(Y, trials=200, random_state=seed)
            assert_(res.ratio >= 0.05)
