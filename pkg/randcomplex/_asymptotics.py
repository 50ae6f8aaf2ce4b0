r"""
Closed-form predictions for the Linial-Meshulam complex

.. math::

    Y = Y(n, p; d), \quad p = \frac{(1+\varepsilon) d \log n}{n}

Its minimum co-degree, spectral gap and Cheeger constant all concentrate
around :math:`(1+\varepsilon) a d \log n` within :math:`C\sqrt{\log n}`,
where :math:`a = a(\varepsilon) \in (0, 1)` solves

.. math::

    (1+\varepsilon)(1 - \log a) a = \varepsilon

or equivalently :math:`(1+\varepsilon)\mathcal{H}(a) = -1` with
:math:`\mathcal{H}(c) = c - c\log c - 1`. In closed form

.. math::

    a(\varepsilon) = \exp\left(1 + W_{-1}\left(
        -\frac{\varepsilon}{e(1+\varepsilon)}\right)\right)

where :math:`W_{-1}` is the lower real branch of the Lambert W function.

"""
from collections import namedtuple

import numpy as np
from scipy.optimize import bisect
from scipy.special import gammaln, logsumexp
from scipy.stats import binom


_BRANCH_POINT = -np.exp(-1)
_SERIES_RADIUS = 0.25
DEFAULT_BAND_CONSTANT = 3.
RESIDUAL_TOL = 1e-13


def lambert_w(branch, x, maxiter=50):
    """
    Real branches of the Lambert W function, the solutions w of
    w * exp(w) = x.

    Parameters
    ----------
    branch : {0, -1}
        0 for the principal branch (w >= -1), -1 for the lower branch
        (w <= -1).

    x : scalar(float)
        Argument; x >= -1/e for branch 0 and -1/e <= x < 0 for
        branch -1.

    maxiter : scalar(int), optional(default=50)
        Maximum number of Halley iterations.

    Returns
    -------
    w : scalar(float)

    Notes
    -----
    Near the branch point the iteration starts from the series
    w = -1 + p - p**2/3 with p = +-sqrt(2(e x + 1)); elsewhere from
    log(-x) - log(-log(-x)) on branch -1 and from x(1 - x) (or
    log(1 + x) for x > 1) on branch 0.

    The iteration stops when the Halley step falls below 1e-15 relative
    to w, or when it stops shrinking while the residual |w exp(w) - x|
    is within 1e-13 |x|.

    References
    ----------
    .. [1] R. M. Corless, G. H. Gonnet, D. E. G. Hare, D. J. Jeffrey and
       D. E. Knuth, "On the Lambert W function," Advances in
       Computational Mathematics, 5, 329-359, 1996.

    """
    if branch not in (0, -1):
        raise ValueError('branch must be 0 or -1')
    x = float(x)
    if not np.isfinite(x):
        raise ValueError('x must be finite')
    if x < _BRANCH_POINT:
        if x < _BRANCH_POINT - 1e-15:
            raise ValueError('x must be at least -1/e')
        x = _BRANCH_POINT
    if branch == -1 and x >= 0:
        raise ValueError('branch -1 requires x < 0')
    if x == _BRANCH_POINT:
        return -1.
    if branch == 0 and x == 0:
        return 0.

    if x - _BRANCH_POINT <= _SERIES_RADIUS:
        p = np.sqrt(max(0., 2 * (np.e * x + 1)))
        if branch == -1:
            p = -p
        w = -1 + p - p**2 / 3
    elif branch == -1:
        w = np.log(-x) - np.log(-np.log(-x))
    elif x <= 1:
        w = x * (1 - x)
    else:
        w = np.log1p(x)

    tol = RESIDUAL_TOL * abs(x)
    last_step = np.inf
    for _ in range(maxiter):
        ew = np.exp(w)
        f = w * ew - x
        w1 = w + 1
        if w1 == 0:
            break
        dw = f / (ew * w1 - (w + 2) * f / (2 * w1))
        # near the branch point the steps stall at rounding level
        if abs(dw) >= last_step and abs(f) <= tol:
            break
        w -= dw
        if abs(dw) <= 1e-15 * (1 + abs(w)):
            break
        last_step = abs(dw)
    else:
        if abs(w * np.exp(w) - x) > tol:
            raise RuntimeError("Failed to converge")
    return float(w)


def a_eps(eps):
    """
    Return a(eps), the root in (0, 1) of (1+eps)(1 - log a) a = eps,
    from its Lambert W closed form.

    Examples
    --------
    >>> abs(a_eps(2 / (np.e - 2)) - 1 / np.e) < 1e-12
    True

    """
    if eps <= 0:
        raise ValueError('eps must be positive')
    w = lambert_w(-1, -eps / (np.e * (1 + eps)))
    return float(np.exp(1 + w))


def a_eps_bisect(eps, xtol=1e-15):
    """
    Return a(eps) by bisection on g(a) = (1+eps)(1 - log a) a - eps,
    which is strictly increasing on (0, 1) with g(0+) = -eps < 0 and
    g(1) = 1.

    """
    if eps <= 0:
        raise ValueError('eps must be positive')

    def g(a):
        return (1 + eps) * (1 - np.log(a)) * a - eps

    return float(bisect(g, 1e-300, 1., xtol=xtol, maxiter=2000))


def entropy_H(c):
    """
    Large-deviation exponent H(c) = c - c log c - 1 of the binomial
    lower tail at ratio c.

    """
    if c <= 0:
        raise ValueError('c must be positive')
    return c - c * np.log(c) - 1


def large_eps_a(eps, d):
    """
    Large-eps expansion 1 - sqrt(2 / ((1+eps) d)) of a(eps).

    """
    return 1 - np.sqrt(2 / ((1 + eps) * d))


def binomial_lower_tail(N, p, c):
    """
    Return P(X <= c N p) for X ~ Bin(N, p), summed exactly in log space.

    Parameters
    ----------
    N : scalar(int)
        Number of trials, N >= 1.

    p : scalar(float)
        Success probability in (0, 1).

    c : scalar(float)
        Ratio, c >= 0.

    Returns
    -------
    f : scalar(float)

    """
    if N < 1:
        raise ValueError('N must be a positive integer')
    if not 0 < p < 1:
        raise ValueError('p must lie in (0, 1)')
    if c < 0:
        raise ValueError('c must be nonnegative')
    k = int(np.floor(c * N * p))
    if k >= N:
        return 1.
    log_f = logsumexp(binom.logpmf(np.arange(k+1), N, p))
    return float(min(1., np.exp(log_f)))


def chernoff_bound(N, p, eps, side='upper'):
    """
    Chernoff bounds on the binomial tails,

        P(Bin(N, p) >= (1+eps) N p) <= exp(-eps**2 N p / 3)

        P(Bin(N, p) <= (1-eps) N p) <= exp(-eps**2 N p / 2)

    Parameters
    ----------
    N : scalar(int)

    p : scalar(float)

    eps : scalar(float)
        Relative deviation, eps > 0.

    side : {'upper', 'lower'}, optional(default='upper')

    """
    if eps <= 0:
        raise ValueError('eps must be positive')
    if side == 'upper':
        return float(np.exp(-eps**2 * N * p / 3))
    if side == 'lower':
        return float(np.exp(-eps**2 * N * p / 2))
    raise ValueError("side must be 'upper' or 'lower'")


def edge_probability(n, d, eps):
    """
    Face probability p = (1+eps) d log n / n, capped at 1.

    """
    if eps <= 0:
        raise ValueError('eps must be positive')
    return float(min(1., (1 + eps) * d * np.log(n) / n))


def first_moment_codegree(n, d, p):
    """
    Smallest k for which the expected number of (d-1)-faces of
    co-degree at most k, C(n, d) P(Bin(n-d, p) <= k), is at least 1.

    """
    if not 0 <= p <= 1:
        raise ValueError('p must lie in [0, 1]')
    log_faces = gammaln(n + 1) - gammaln(d + 1) - gammaln(n - d + 1)
    ks = np.arange(n - d + 1)
    log_expect = log_faces + binom.logcdf(ks, n - d, p)
    return int(ks[np.argmax(log_expect >= -1e-12)])


class Prediction(namedtuple('Prediction',
                            'n d eps a center band_halfwidth '
                            'large_eps_center expansion_a first_moment p')):
    """
    Predicted location of delta, lambda and h for Y(n, p; d) with
    p = (1+eps) d log n / n.

    Attributes
    ----------
    a : scalar(float)
        a(eps).

    center : scalar(float)
        (1+eps) a d log n.

    band_halfwidth : scalar(float)
        C sqrt(log n).

    large_eps_center : scalar(float)
        (D - sqrt(2D)) log n with D = (1+eps) d.

    expansion_a : scalar(float)
        1 - sqrt(2 / ((1+eps) d)), the large-eps expansion of a(eps).

    first_moment : scalar(int)
        Finite-n location of the minimum co-degree from
        `first_moment_codegree`.

    p : scalar(float)
        The face probability, capped at 1.

    """
    __slots__ = ()

    def to_dict(self):
        return {'n': int(self.n), 'd': int(self.d), 'eps': float(self.eps),
                'a': self.a, 'center': self.center,
                'band': self.band_halfwidth,
                'large_eps_center': self.large_eps_center,
                'expansion_a': self.expansion_a,
                'first_moment': self.first_moment, 'p': self.p}


def predict(n, d, eps, C=DEFAULT_BAND_CONSTANT):
    """
    Predicted concentration band for Y(n, p; d).

    Parameters
    ----------
    n : scalar(int)
        Number of vertices, n > d.

    d : scalar(int)
        Dimension.

    eps : scalar(float)
        eps > 0.

    C : scalar(float), optional(default=3)
        Band constant; the half-width is C sqrt(log n).

    Returns
    -------
    prediction : Prediction

    """
    if n <= d:
        raise ValueError('n must be greater than d')
    if C <= 0:
        raise ValueError('C must be positive')
    a = a_eps(eps)
    log_n = np.log(n)
    D = (1 + eps) * d
    p = edge_probability(n, d, eps)
    return Prediction(int(n), int(d), float(eps), a,
                      float((1 + eps) * a * d * log_n),
                      float(C * np.sqrt(log_n)),
                      float((D - np.sqrt(2 * D)) * log_n),
                      float(large_eps_a(eps, d)),
                      first_moment_codegree(n, d, p), p)
