"""Complex square matrices as a normed algebra under the spectral norm."""

from dataclasses import dataclass

import numpy as np

from ._kernels import _eigvalsh, _opnorm
from .errors import ConvergenceError, DimensionMismatch, NotHermitian

__all__ = [
    "SpectralRange",
    "as_element",
    "identity",
    "add",
    "scale",
    "mul",
    "adjoint",
    "operator_norm",
    "hermitian_range",
    "is_hermitian",
    "is_unitary",
    "element_from_dict",
    "element_to_dict",
]

HERMITIAN_TOL = 1e-10
UNITARY_TOL = 1e-10


@dataclass(frozen=True)
class SpectralRange:
    """Convex hull [lo, hi] of a Hermitian matrix's eigenvalues."""

    lo: float
    hi: float


def as_element(entries):
    """Coerce ``entries`` to a square complex matrix.

    Parameters
    ----------
    entries : array_like
        Anything numpy can turn into a 2d complex array.

    Returns
    -------
    ndarray
        C-contiguous complex128 square matrix.

    Raises
    ------
    DimensionMismatch
        If the shape is not square.
    ValueError
        If any entry is NaN or infinite.
    """
    m = np.ascontiguousarray(entries, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise DimensionMismatch("expected a square matrix, got shape %r" % (m.shape,))
    if not np.all(np.isfinite(m.real)) or not np.all(np.isfinite(m.imag)):
        raise ValueError("matrix entries must be finite")
    return m


def identity(dim):
    """The unit element of the dim x dim matrix algebra."""
    if dim < 1:
        raise DimensionMismatch("dim must be >= 1, got %r" % (dim,))
    return np.eye(int(dim), dtype=np.complex128)


def add(x, y):
    """Entrywise sum of two same-shaped elements."""
    x = as_element(x)
    y = as_element(y)
    if x.shape != y.shape:
        raise DimensionMismatch("cannot add %r and %r" % (x.shape, y.shape))
    return x + y


def scale(c, x):
    """Scalar multiple c*x."""
    return complex(c) * as_element(x)


def mul(x, y):
    """Matrix product x @ y."""
    x = as_element(x)
    y = as_element(y)
    if x.shape != y.shape:
        raise DimensionMismatch("cannot multiply %r and %r" % (x.shape, y.shape))
    return x @ y


def adjoint(x):
    """Conjugate transpose."""
    return np.ascontiguousarray(as_element(x).conj().T)


def operator_norm(x):
    """Largest singular value of x.

    Computed from the top eigenvalue of x* x with a deterministic
    cyclic Jacobi sweep; no randomness, no value snapping.
    """
    value, ok = _opnorm(as_element(x))
    if not ok:
        raise ConvergenceError("eigensolver sweep limit reached")
    return float(value)


def _norm_unchecked(m):
    value, ok = _opnorm(m)
    if not ok:
        raise ConvergenceError("eigensolver sweep limit reached")
    return float(value)


def is_hermitian(x):
    """True if ||x - x*|| <= 1e-10 * max(1, ||x||)."""
    m = as_element(x)
    dev = _norm_unchecked(np.ascontiguousarray(m - m.conj().T))
    return dev <= HERMITIAN_TOL * max(1.0, _norm_unchecked(m))


def is_unitary(x):
    """True if ||x* x - I|| <= 1e-10."""
    m = as_element(x)
    g = m.conj().T @ m
    np.fill_diagonal(g, np.diagonal(g) - 1.0)
    return _norm_unchecked(np.ascontiguousarray(g)) <= UNITARY_TOL


def hermitian_range(x):
    """Spectral range [min eigenvalue, max eigenvalue] of a Hermitian x.

    Raises NotHermitian when x fails the is_hermitian tolerance.
    """
    m = as_element(x)
    dev = _norm_unchecked(np.ascontiguousarray(m - m.conj().T))
    if dev > HERMITIAN_TOL * max(1.0, _norm_unchecked(m)):
        raise NotHermitian("||x - x*|| = %r exceeds tolerance" % dev)
    eigs, ok = _eigvalsh(m)
    if not ok:
        raise ConvergenceError("eigensolver sweep limit reached")
    return SpectralRange(float(eigs[0]), float(eigs[-1]))


def element_from_dict(data):
    """Build a matrix from {"dim": n, "re": rows, "im": rows?}.

    "im" defaults to all zeros. Shapes must match dim exactly.
    """
    if not isinstance(data, dict):
        raise ValueError("expected a JSON object")
    dim = data["dim"]
    if not isinstance(dim, int) or dim < 1:
        raise ValueError("dim must be a positive integer")
    re = np.asarray(data["re"], dtype=np.float64)
    if re.shape != (dim, dim):
        raise DimensionMismatch(
            "re has shape %r, expected %r" % (re.shape, (dim, dim))
        )
    if "im" in data and data["im"] is not None:
        im = np.asarray(data["im"], dtype=np.float64)
        if im.shape != (dim, dim):
            raise DimensionMismatch(
                "im has shape %r, expected %r" % (im.shape, (dim, dim))
            )
    else:
        im = np.zeros((dim, dim))
    return as_element(re + 1j * im)


def element_to_dict(x):
    """Inverse of element_from_dict."""
    m = as_element(x)
    return {
        "dim": m.shape[0],
        "re": m.real.tolist(),
        "im": m.imag.tolist(),
    }
