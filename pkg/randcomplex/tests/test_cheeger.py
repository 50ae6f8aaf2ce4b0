"""
Tests for _cheeger.py

"""
import itertools

import numpy as np
import pytest
from numpy.testing import assert_allclose, assert_raises, assert_

from randcomplex import (
    Partition, generate, from_faces, crossing_faces, partition_score,
    partition_count, cheeger_exact, cheeger_from_min_codegree, spectral_gap,
    InstanceTooLargeError
)
from randcomplex._cheeger import _restricted_growth_strings


def brute_force_cheeger(Y):
    """Minimum score over all labelings with d+1 non-empty blocks."""
    k = Y.d + 1
    faces = [tuple(f) for f in Y.faces.tolist()]
    best = np.inf
    for labels in itertools.product(range(k), repeat=Y.n):
        sizes = [labels.count(i) for i in range(k)]
        if min(sizes) == 0:
            continue
        cross = sum(1 for f in faces
                    if sorted(labels[v] for v in f) == list(range(k)))
        best = min(best, Y.n * cross / np.prod(sizes))
    return best


class TestPartition:
    def test_valid(self):
        P = Partition([[2, 0], [1], [3]])
        assert_(P.n == 4)
        assert_(P.blocks == ((0, 2), (1,), (3,)))
        assert_(list(P.labels) == [0, 1, 0, 2])
        assert_(list(P.sizes) == [2, 1, 1])
        assert_(Partition.from_labels(P.labels) == P)

    def test_invalid(self):
        assert_raises(ValueError, Partition, [])
        assert_raises(ValueError, Partition, [[0, 1], []])
        assert_raises(ValueError, Partition, [[0, 1], [1, 2]])
        assert_raises(ValueError, Partition, [[0, 1], [3]])


class TestScores:
    def setup_method(self):
        self.Y = from_faces(4, 2, [(0, 1, 2), (0, 1, 3)])
        self.P = Partition([[0], [1], [2, 3]])

    def test_crossing(self):
        assert_(crossing_faces(self.Y, self.P) == 2)

    def test_score(self):
        assert_allclose(partition_score(self.Y, self.P), 4.)

    def test_complete(self):
        Y = generate(6, 2, 1., seed=0)
        for P in [Partition([[0], [1], [2, 3, 4, 5]]),
                  Partition([[0, 1], [2, 3], [4, 5]])]:
            assert_(crossing_faces(Y, P) == np.prod(P.sizes))
            assert_allclose(partition_score(Y, P), 6.)

    def test_empty(self):
        Y = generate(5, 2, 0., seed=0)
        P = Partition([[0], [1], [2, 3, 4]])
        assert_(crossing_faces(Y, P) == 0)
        assert_(partition_score(Y, P) == 0)

    def test_wrong_partition(self):
        assert_raises(ValueError, crossing_faces, self.Y,
                      Partition([[0, 1], [2, 3]]))
        assert_raises(ValueError, crossing_faces, self.Y,
                      Partition([[0], [1], [2]]))

    def test_relabel_invariance(self):
        Y = generate(7, 2, 0.5, seed=5)
        P = Partition([[0, 4], [1, 2, 6], [3, 5]])
        base = partition_score(Y, P)
        rng = np.random.default_rng(0)
        for _ in range(20):
            order = rng.permutation(3)
            Q = Partition([P.blocks[i] for i in order])
            assert_allclose(partition_score(Y, Q), base)


class TestEnumeration:
    def test_partition_count(self):
        assert_(partition_count(7, 3) == 301)
        assert_(partition_count(4, 2) == 7)
        assert_(partition_count(10, 4) == 34105)

    def test_growth_strings(self):
        for n, k in [(4, 2), (6, 3), (7, 3), (7, 4)]:
            rows = np.vstack(list(_restricted_growth_strings(n, k)))
            assert_(rows.shape[0] == partition_count(n, k))
            assert_(len({tuple(r) for r in rows.tolist()}) == rows.shape[0])
            assert_(np.all(rows.max(axis=1) == k - 1))
            assert_(np.all(rows[:, 0] == 0))
            # each label first appears after all smaller ones
            for r in rows.tolist():
                firsts = [r.index(i) for i in range(k)]
                assert_(firsts == sorted(firsts))

    def test_growth_strings_batched(self):
        batches = list(_restricted_growth_strings(10, 3))
        assert_(len(batches) > 1)
        assert_(sum(b.shape[0] for b in batches) == partition_count(10, 3))

    def test_growth_strings_lexicographic(self):
        for n, k in [(5, 2), (7, 3), (8, 4)]:
            rows = np.vstack(list(_restricted_growth_strings(n, k)))
            expected = [s for s in itertools.product(range(k), repeat=n)
                        if all(s[i] <= max(s[:i], default=-1) + 1
                               for i in range(n)) and max(s) == k - 1]
            assert_(rows.tolist() == [list(s) for s in expected])

    def test_growth_strings_large(self):
        total = sum(b.shape[0] for b in _restricted_growth_strings(13, 3))
        assert_(total == partition_count(13, 3) == 261625)


class TestCheegerExact:
    def test_complete(self):
        res = cheeger_exact(generate(5, 2, 1., seed=0))
        assert_allclose(res.value, 5.)

    def test_empty(self):
        res = cheeger_exact(generate(6, 2, 0., seed=0))
        assert_(res.value == 0)
        assert_(res.crossing_count == 0)

    def test_witness_consistent(self):
        Y = generate(7, 2, 0.6, seed=3)
        res = cheeger_exact(Y)
        assert_(res.witness.num_blocks == 3)
        assert_(crossing_faces(Y, res.witness) == res.crossing_count)
        assert_allclose(res.value, partition_score(Y, res.witness))

    def test_brute_force(self):
        Y = generate(7, 2, 0.6, seed=3)
        assert_allclose(cheeger_exact(Y).value, brute_force_cheeger(Y),
                        rtol=0, atol=1e-12)

    def test_brute_force_random(self):
        for seed in range(5):
            Y = generate(6, 2, 0.5, seed)
            assert_allclose(cheeger_exact(Y).value, brute_force_cheeger(Y),
                            rtol=0, atol=1e-12)

    def test_graph(self):
        # for d = 1, h is n |E(A, B)| / (|A| |B|)
        Y = from_faces(4, 1, [(0, 1), (1, 2), (2, 3)])
        assert_allclose(cheeger_exact(Y).value, 4 * 1 / 4)

    def test_too_large(self):
        Y = generate(7, 2, 0.5, seed=0)
        with pytest.raises(InstanceTooLargeError) as e:
            cheeger_exact(Y, max_partitions=300)
        assert_(e.value.size == 301)
        assert_(e.value.limit == 300)

    def test_to_dict(self):
        res = cheeger_exact(from_faces(4, 2, [(0, 1, 2), (0, 1, 3)]))
        data = res.to_dict()
        assert_(set(data) == {'h', 'witness', 'crossing'})
        assert_(sorted(v for b in data['witness'] for v in b) ==
                [0, 1, 2, 3])

    def test_monotone(self):
        rng = np.random.default_rng(1)
        for seed in range(20):
            Y = generate(6, 2, 0.3, seed)
            faces = [tuple(f) for f in Y.faces.tolist()]
            missing = [tuple(f) for f in
                       generate(6, 2, 1., 0).faces.tolist()
                       if tuple(f) not in Y.top_faces]
            if not missing:
                continue
            extra = missing[rng.integers(len(missing))]
            Z = from_faces(6, 2, faces + [extra])
            assert_(cheeger_exact(Z).value >= cheeger_exact(Y).value - 1e-12)


class TestCodegreeWitness:
    def test_complete(self):
        res = cheeger_from_min_codegree(generate(6, 2, 1., seed=0))
        assert_allclose(res.value, 6.)

    def test_codegree_zero(self):
        res = cheeger_from_min_codegree(
            from_faces(4, 2, [(0, 1, 2), (0, 1, 3)]))
        assert_(res.value == 0)

    def test_upper_bound(self):
        for seed in range(20):
            Y = generate(7, 2, 0.6, seed)
            bound = cheeger_from_min_codegree(Y)
            assert_allclose(bound.value,
                            Y.n * Y.min_codegree / (Y.n - Y.d))
            assert_(cheeger_exact(Y).value <= bound.value + 1e-12)


@pytest.mark.slow
def test_spectral_gap_below_cheeger():
    violations = 0
    for p in (0.3, 0.6, 0.9):
        for seed in range(34):
            n = 6 + seed % 3
            Y = generate(n, 2, p, seed)
            if spectral_gap(Y).lam > cheeger_exact(Y).value + 1e-8:
                violations += 1
    assert_(violations == 0)
