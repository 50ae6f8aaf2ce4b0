"""
Tests for util/random.py

"""
import numpy as np
from numpy.testing import assert_array_equal, assert_raises, assert_
from randcomplex.util import check_random_state, mix_seed, subset_uniforms
from randcomplex.util.random import SUBSET_CHUNK


def test_check_random_state():
    rng = np.random.default_rng(0)
    assert_(check_random_state(rng) is rng)
    rs = np.random.RandomState(0)
    assert_(check_random_state(rs) is rs)
    assert_(isinstance(check_random_state(None), np.random.Generator))
    assert_array_equal(check_random_state(5).random(3),
                       np.random.default_rng(5).random(3))
    assert_raises(ValueError, check_random_state, 'a')


def test_mix_seed():
    s = mix_seed(0, 10, 3)
    assert_(s == mix_seed(0, 10, 3))
    assert_(s != mix_seed(0, 10, 4))
    assert_(s != mix_seed(1, 10, 3))
    assert_(0 <= s < 2**64)


def test_subset_uniforms_range():
    u = subset_uniforms(7, 0, 1000)
    assert_(u.shape == (1000,))
    assert_(np.all((u >= 0) & (u < 1)))


def test_subset_uniforms_positional():
    # the variate of a rank does not depend on the window it is read in
    full = subset_uniforms(11, 0, 300)
    assert_array_equal(subset_uniforms(11, 100, 200), full[100:200])


def test_subset_uniforms_across_blocks():
    start = SUBSET_CHUNK - 5
    u = subset_uniforms(3, start, start + 10)
    assert_array_equal(u[5:], subset_uniforms(3, SUBSET_CHUNK,
                                              SUBSET_CHUNK + 5))
    assert_array_equal(u[:5], subset_uniforms(3, start, SUBSET_CHUNK))


def test_subset_uniforms_invalid():
    assert_raises(ValueError, subset_uniforms, 0, 5, 2)
