"""
Utilities to Support Random State Infrastructure

"""
import numbers

import numpy as np


_MASK64 = (1 << 64) - 1

# SplitMix64 constants (Steele, Lea and Flood, 2014)
_GOLDEN_GAMMA = 0x9E3779B97F4A7C15
_MIX_MULT_1 = 0xBF58476D1CE4E5B9
_MIX_MULT_2 = 0x94D049BB133111EB

# Number of subsets drawn from one Philox stream position block
SUBSET_CHUNK = 1 << 20


def check_random_state(seed):
    """
    Turn `seed` into a `np.random.Generator` instance.

    Parameters
    ----------
    seed : None, int, `np.random.RandomState`, or `np.random.Generator`
        If None, a freshly seeded ``Generator`` is returned. If `seed`
        is an int, a new ``Generator`` seeded with `seed` is returned.
        If `seed` is already a `RandomState` or `Generator` instance,
        then that instance is returned.

    Returns
    -------
    `np.random.Generator` or `np.random.RandomState`
        Random number generator.

    Notes
    -----
    This code was originally sourced from scikit-learn.

    """
    if seed is None or seed is np.random:
        return np.random.default_rng()
    if isinstance(seed, (numbers.Integral, np.integer)):
        return np.random.default_rng(int(seed) & _MASK64)
    if isinstance(seed, (np.random.RandomState, np.random.Generator)):
        return seed
    raise ValueError('%r cannot be used to seed a numpy.random.Generator'
                     ' instance' % seed)


def splitmix64(x):
    """
    SplitMix64 finalizer applied to the 64-bit integer `x`.

    """
    z = (x + _GOLDEN_GAMMA) & _MASK64
    z = ((z ^ (z >> 30)) * _MIX_MULT_1) & _MASK64
    z = ((z ^ (z >> 27)) * _MIX_MULT_2) & _MASK64
    return z ^ (z >> 31)


def mix_seed(*values):
    """
    Derive a 64-bit seed from a sequence of nonnegative integers, e.g.
    ``mix_seed(master_seed, n, sample_index)``. The result depends only
    on the values, not on the machine or the process.

    """
    h = 0
    for v in values:
        h = splitmix64(h ^ (int(v) & _MASK64))
    return h


def subset_uniforms(seed, start, stop):
    """
    Return the uniform variates attached to the subset ranks
    start, ..., stop-1 under `seed`.

    The variate of rank r is the (r mod SUBSET_CHUNK)-th double of the
    Philox stream keyed by `seed` whose counter starts at block
    r // SUBSET_CHUNK, so it is a function of (seed, r) alone.

    Parameters
    ----------
    seed : scalar(int)
        64-bit seed.

    start, stop : scalar(int)
        Rank range.

    Returns
    -------
    u : ndarray(float, ndim=1)
        Array of length stop - start with values in [0, 1).

    """
    if stop < start:
        raise ValueError('stop must be greater than or equal to start')
    key = int(seed) & _MASK64
    out = np.empty(stop - start)
    pos = start
    while pos < stop:
        block = pos // SUBSET_CHUNK
        block_start = block * SUBSET_CHUNK
        block_stop = min(block_start + SUBSET_CHUNK, stop)
        bit_gen = np.random.Philox(key=key, counter=block << 192)
        u = np.random.Generator(bit_gen).random(block_stop - block_start)
        out[pos-start:block_stop-start] = u[pos-block_start:]
        pos = block_stop
    return out
