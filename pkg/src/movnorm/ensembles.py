"""Reproducible random matrix ensembles for the verification harness."""

from dataclasses import dataclass

import numpy as np

from ._kernels import _opnorm
from .errors import BadSpec, ConvergenceError
from .streams import generator, trial_seed

__all__ = ["KINDS", "EnsembleSpec", "draw", "generate"]

KINDS = (
    "ginibre",
    "hermitian",
    "unitary",
    "projection",
    "fne",
    "nilpotent-like",
)


@dataclass(frozen=True)
class EnsembleSpec:
    """Recipe for a reproducible batch of random matrices.

    ``norm_cap`` is the upper bound of the rescale target for the
    norm-capped kinds; unitaries and projections have norm 1 by
    construction and ignore it.
    """

    kind: str
    dim: int
    count: int
    seed: int
    norm_cap: float = 1.0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise BadSpec("unknown kind %r" % (self.kind,))
        if not isinstance(self.dim, int) or self.dim < 1:
            raise BadSpec("dim must be a positive integer, got %r" % (self.dim,))
        if not isinstance(self.count, int) or self.count < 1:
            raise BadSpec("count must be >= 1, got %r" % (self.count,))
        if not isinstance(self.seed, int) or not 0 <= self.seed < 2**64:
            raise BadSpec("seed must be a 64-bit integer, got %r" % (self.seed,))
        if not 0.0 < self.norm_cap <= 1.0:
            raise BadSpec("norm_cap must lie in (0, 1], got %r" % (self.norm_cap,))


def _ginibre_raw(rng, dim):
    """Standard complex normal entries, variance 1 per entry."""
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return g / np.sqrt(2.0)


def _rescaled(m, rng, norm_cap):
    """Scale m to operator norm norm_cap * u with u uniform on (0, 1]."""
    u = 1.0 - rng.random()
    nrm, ok = _opnorm(np.ascontiguousarray(m))
    if not ok:
        raise ConvergenceError("eigensolver sweep limit reached")
    if nrm == 0.0:
        return m
    return m * (norm_cap * u / nrm)


def _haar_unitary(rng, dim):
    """QR of a Ginibre sample with the R-diagonal phase fix."""
    q, r = np.linalg.qr(_ginibre_raw(rng, dim))
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def draw(kind, dim, norm_cap, rng):
    """One sample of the given kind; consumes a fixed number of draws."""
    if kind == "ginibre":
        m = _rescaled(_ginibre_raw(rng, dim), rng, norm_cap)
    elif kind == "hermitian":
        g = _ginibre_raw(rng, dim)
        m = _rescaled((g + g.conj().T) / 2.0, rng, norm_cap)
    elif kind == "unitary":
        m = _haar_unitary(rng, dim)
    elif kind == "projection":
        u = _haar_unitary(rng, dim)
        k = int(rng.integers(1, dim + 1))
        cols = u[:, :k]
        m = cols @ cols.conj().T
    elif kind == "fne":
        c = _rescaled(_ginibre_raw(rng, dim), rng, norm_cap)
        m = (np.eye(dim) + c) / 2.0
    elif kind == "nilpotent-like":
        # dim 1 has no strict upper triangle; the sample is the zero matrix
        g = np.triu(_ginibre_raw(rng, dim), 1)
        m = _rescaled(g, rng, norm_cap)
    else:
        raise BadSpec("unknown kind %r" % (kind,))
    return np.ascontiguousarray(m, dtype=np.complex128)


def generate(spec):
    """All samples of a spec; identical specs yield identical samples."""
    out = []
    label = "ensemble/%s/%d" % (spec.kind, spec.dim)
    for i in range(spec.count):
        rng = generator(trial_seed(spec.seed, label, i))
        out.append(draw(spec.kind, spec.dim, spec.norm_cap, rng))
    return out
