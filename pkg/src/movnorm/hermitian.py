"""Closed forms for Hermitian elements and the unitary lower bound.

For a Hermitian matrix with spectral range [a, b] the augmented moving
norm is max(|a - lambda|, |b - lambda|) + lambda, which works out to b
while lambda stays below (a + b)/2 (when that midpoint is nonnegative)
and 2*lambda - a beyond it; the horizon of a nonexpansive Hermitian
matrix is therefore (1 + a)/2. These serve as analytic cross-checks for
the bisection solver.
"""

import numpy as np

from .algebra import as_element, is_unitary
from .errors import NegativeLambda, NotNonexpansive, NotUnitary
from .moving import NORM_SLACK, augmented_moving_norm

__all__ = [
    "hermitian_am_closed_form",
    "hermitian_horizon_closed_form",
    "unitary_am_lower_bound_check",
]


def hermitian_am_closed_form(spectral_range, lam):
    """max(|lo - lambda|, |hi - lambda|) + lambda."""
    lam = float(lam)
    if not lam >= 0.0:
        raise NegativeLambda("lambda must be >= 0, got %r" % lam)
    lo = spectral_range.lo
    hi = spectral_range.hi
    return max(abs(lo - lam), abs(hi - lam)) + lam


def hermitian_horizon_closed_form(spectral_range):
    """(1 + lo)/2 for a spectral range inside [-1, 1]."""
    lo = spectral_range.lo
    hi = spectral_range.hi
    if lo < -1.0 - NORM_SLACK or hi > 1.0 + NORM_SLACK:
        raise NotNonexpansive(
            "spectral range [%r, %r] is not inside [-1, 1]" % (lo, hi)
        )
    return (1.0 + lo) / 2.0


def unitary_am_lower_bound_check(u, lambdas):
    """Worst slack min(am(u, lambda) - 1) over a lambda grid.

    A passing check returns at least -1e-9; the bound am >= 1 holds for
    every lambda >= 0, not only past 1.
    """
    m = as_element(u)
    if not is_unitary(m):
        raise NotUnitary("argument fails the unitarity tolerance")
    grid = np.asarray(lambdas, dtype=np.float64).ravel()
    worst = np.inf
    for lam in grid:
        worst = min(worst, augmented_moving_norm(m, lam) - 1.0)
    return float(worst)
