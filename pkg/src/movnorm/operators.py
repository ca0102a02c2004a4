"""Nonexpansive, monotone and firmly nonexpansive matrix predicates."""

from dataclasses import dataclass

import numpy as np

from ._kernels import _eigvalsh, _gram, _hermitian_part
from .algebra import as_element, identity, operator_norm
from .errors import ConvergenceError
from .moving import NORM_SLACK, horizon

__all__ = [
    "ClassReport",
    "is_nonexpansive",
    "is_monotone",
    "is_fne",
    "is_fne_via_horizon",
    "fne_inner_product_check",
    "fne_gap",
    "min_symmetric_eig",
    "classify",
]

MONOTONE_TOL = 1e-10
FNE_HORIZON_TOL = 1e-8


@dataclass(frozen=True)
class ClassReport:
    """Predicate results plus the diagnostics behind them."""

    ne: bool
    monotone: bool
    fne: bool
    fne_via_horizon: bool
    norm: float
    min_sym_eig: float
    fne_gap: float


def _min_eig(h):
    eigs, ok = _eigvalsh(h)
    if not ok:
        raise ConvergenceError("eigensolver sweep limit reached")
    return float(eigs[0])


def is_nonexpansive(a):
    """||A|| <= 1 up to the standard slack."""
    return operator_norm(a) <= 1.0 + NORM_SLACK


def min_symmetric_eig(a):
    """Smallest eigenvalue of the Hermitian part (A + A*)/2."""
    return _min_eig(as_element(a))


def is_monotone(a):
    """Re<Ax, x> >= 0 for all x, i.e. Hermitian part PSD."""
    return min_symmetric_eig(a) >= -MONOTONE_TOL


def is_fne(a):
    """A and 2A - I both nonexpansive."""
    m = as_element(a)
    if operator_norm(m) > 1.0 + NORM_SLACK:
        return False
    return operator_norm(2.0 * m - identity(m.shape[0])) <= 1.0 + NORM_SLACK


def is_fne_via_horizon(a):
    """Horizon characterization: Hor(A) >= 1/2.

    Raises NotNonexpansive when A is not nonexpansive.
    """
    return horizon(a).value >= 0.5 - FNE_HORIZON_TOL


def fne_gap(a):
    """Smallest eigenvalue of (A + A*)/2 - A*A.

    Nonnegative exactly when ||2A - I|| <= 1, so this is the matrix-level
    form of the inner-product characterization of firm nonexpansiveness.
    """
    m = as_element(a)
    return _min_eig(np.ascontiguousarray(_hermitian_part(m) - _gram(m)))


def fne_inner_product_check(a, trial_vectors):
    """Worst of ||Ax||^2 - Re<Ax, x> over the given vectors.

    At most 1e-9 for a genuinely firmly nonexpansive A; positive values
    witness a violation.
    """
    m = as_element(a)
    vectors = np.asarray(trial_vectors, dtype=np.complex128)
    if vectors.ndim == 1:
        vectors = vectors.reshape(1, -1)
    av = vectors @ m.T
    lhs = np.einsum("ij,ij->i", av.conj(), av).real
    rhs = np.einsum("ij,ij->i", vectors.conj(), av).real
    return float(np.max(lhs - rhs))


def classify(a):
    """Evaluate every predicate on one matrix."""
    m = as_element(a)
    nrm = operator_norm(m)
    sym = min_symmetric_eig(m)
    gap = fne_gap(m)
    ne = nrm <= 1.0 + NORM_SLACK
    fne = ne and operator_norm(2.0 * m - identity(m.shape[0])) <= 1.0 + NORM_SLACK
    via_horizon = ne and is_fne_via_horizon(m)
    return ClassReport(
        ne=ne,
        monotone=sym >= -MONOTONE_TOL,
        fne=fne,
        fne_via_horizon=via_horizon,
        norm=nrm,
        min_sym_eig=sym,
        fne_gap=gap,
    )
