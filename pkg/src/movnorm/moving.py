"""Moving norm, augmented moving norm, curve sampling and the horizon."""

from dataclasses import dataclass

import numpy as np

from ._kernels import _horizon, _moving
from .algebra import as_element
from .errors import BadGrid, ConvergenceError, NegativeLambda, NotNonexpansive

__all__ = [
    "TOL_LAMBDA",
    "TOL_FLAT",
    "MovingNormCurve",
    "HorizonResult",
    "moving_norm",
    "augmented_moving_norm",
    "sample_curve",
    "horizon",
]

# bracket width for the horizon bisection
TOL_LAMBDA = 1e-10
# am values within this of 1 are treated as equal to 1 by the bisection
# predicate; flat segments would otherwise make it chatter on rounding
TOL_FLAT = 1e-9
# norms within this of 1 still count as nonexpansive
NORM_SLACK = 1e-10


@dataclass(frozen=True)
class MovingNormCurve:
    """Sampled (lambda, m(lambda), am(lambda)) triples on an ascending grid."""

    lambdas: np.ndarray
    m_values: np.ndarray
    am_values: np.ndarray


@dataclass(frozen=True)
class HorizonResult:
    """Output of the horizon bisection.

    ``value`` is the largest lambda in [0, 1] whose augmented moving
    norm stays within TOL_FLAT of 1; ``flat_at_one`` reports whether the
    curve sits at 1 on a nondegenerate initial segment.
    """

    value: float
    bracket_lo: float
    bracket_hi: float
    flat_at_one: bool
    iterations: int


def _check_lambda(lam):
    lam = float(lam)
    if not lam >= 0.0:
        raise NegativeLambda("lambda must be >= 0, got %r" % lam)
    return lam


def moving_norm(x, lam):
    """||x - lambda*I|| for lambda >= 0."""
    lam = _check_lambda(lam)
    value, ok = _moving(as_element(x), lam)
    if not ok:
        raise ConvergenceError("eigensolver sweep limit reached")
    return float(value)


def augmented_moving_norm(x, lam):
    """moving_norm(x, lambda) + lambda."""
    lam = _check_lambda(lam)
    return moving_norm(x, lam) + lam


def sample_curve(x, lambda_max, steps):
    """Evaluate both norms on a uniform grid over [0, lambda_max].

    Parameters
    ----------
    x : array_like
        Square matrix.
    lambda_max : float
        Right endpoint, must be positive.
    steps : int
        Number of grid points including both endpoints, at least 2.
    """
    lambda_max = float(lambda_max)
    steps = int(steps)
    if not lambda_max > 0.0:
        raise BadGrid("lambda_max must be positive, got %r" % lambda_max)
    if steps < 2:
        raise BadGrid("steps must be >= 2, got %r" % steps)
    m = as_element(x)
    lambdas = np.linspace(0.0, lambda_max, steps)
    m_values = np.empty(steps)
    for i in range(steps):
        value, ok = _moving(m, lambdas[i])
        if not ok:
            raise ConvergenceError("eigensolver sweep limit reached")
        m_values[i] = value
    return MovingNormCurve(lambdas, m_values, m_values + lambdas)


def horizon(x):
    """Largest lambda in [0, 1] with am(lambda) = 1, for nonexpansive x.

    Bisects the monotone predicate am(lambda) > 1 + TOL_FLAT, valid
    because am is convex, am(0) = ||x|| <= 1 and am(lambda) >= lambda.
    Returns value = 1 exactly when am(1) <= 1 + TOL_FLAT.

    Raises NotNonexpansive when ||x|| > 1 + 1e-10.
    """
    m = as_element(x)
    status, value, lo, hi, iters, flat, nrm = _horizon(m, TOL_LAMBDA, TOL_FLAT)
    if status == 2:
        raise ConvergenceError("eigensolver sweep limit reached")
    if status == 1:
        raise NotNonexpansive("operator norm %r exceeds 1" % nrm)
    return HorizonResult(float(value), float(lo), float(hi), bool(flat), int(iters))
