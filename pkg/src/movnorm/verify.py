"""Theorem verification over random matrix ensembles.

Each check draws fresh samples per trial from a splittable substream,
measures how far a proved statement is from holding, and reports the
worst violation together with the substream id that reproduces it.

Check ids and the statements they exercise:

- eq4_scaling        m(c*x, c*lam) = c * m(x, lam)
- eq5_sum            m(x+y, lam+mu) <= m(x, lam) + m(y, mu)
- eq6_infimum        m(x, lam) <= inf over y+z=x, mu+nu=lam of m(y, mu) + m(z, nu)
- eq8_am_scaling     am(c*x, c*lam) = c * am(x, lam)
- eq9_am_sum         am(x+y, lam+mu) <= am(x, lam) + am(y, mu)
- eq10_am_infimum    the infimum bound for am
- eq12_product       am(xy, lam*mu) <= am(x, lam) * am(y, mu)
- thm_convexity      lam -> am(lam) is convex
- thm_am_floor       am(lam) >= lam
- eq14_interior      am < 1 before the horizon forces ||x|| < 1
- eq15_flat          a flat initial segment at 1 forces ||x|| = 1
- eq16_bound         0 <= Hor(x) <= 1
- thm_hor_sum        Hor(t*x + (1-t)*y) >= t*Hor(x) + (1-t)*Hor(y)
- thm_hor_product    Hor(xy) >= Hor(x) * Hor(y)
- eq19_cstar         am(x*x, lam^2) <= am(x, lam)^2, same for xx*
- eq20_cstar_hor     Hor(x*x) >= Hor(x)^2, same for xx*
- thm_adjoint        Hor(x) = Hor(x*)
- thm_unitary        am(u, lam) >= 1 for unitary u, and am = 1 on [0, Hor(u)]
- thm_hermitian_closed_form  am of a Hermitian matrix matches its
                     spectral-range closed form
- thm_hermitian_horizon      Hor of a Hermitian NE matrix is (1 + a)/2
- thm_fne_equiv      norm, horizon and matrix-gap characterizations of
                     firm nonexpansiveness agree outside 1e-6 boundary
                     bands (borderline samples are skipped, not passed)
- eq29_fne_vectors   ||Ax||^2 <= Re<Ax, x> on random vectors for FNE A
"""

from dataclasses import dataclass

import numpy as np

from ._kernels import _horizon, _moving, _opnorm
from .algebra import as_element, hermitian_range
from .ensembles import EnsembleSpec, KINDS, draw, _ginibre_raw
from .errors import ConvergenceError, NotNonexpansive
from .hermitian import hermitian_am_closed_form
from .moving import TOL_FLAT, TOL_LAMBDA, augmented_moving_norm
from .operators import fne_gap, fne_inner_product_check
from .streams import generator, trial_seed

__all__ = [
    "Check",
    "TheoremReport",
    "CHECKS",
    "DEFAULT_TOLERANCES",
    "DEFAULT_DIMS",
    "DEFAULT_COUNT",
    "default_specs",
    "run_all",
    "replay_trial",
    "infimum_decomposition_check",
]

DEFAULT_DIMS = (2, 3, 4, 8)
DEFAULT_COUNT = 500

_GRID_LOWER = np.linspace(0.0, 2.0, 41)
_GRID_CLOSED = np.linspace(0.0, 2.0, 64)
_FLAT_POINTS = 9
_SKIP_BAND = 1e-6


def _c(m):
    return np.ascontiguousarray(m, dtype=np.complex128)


def _norm(m):
    value, ok = _opnorm(m)
    if not ok:
        raise ConvergenceError("eigensolver sweep limit reached")
    return value


def _mv(m, lam):
    value, ok = _moving(m, lam)
    if not ok:
        raise ConvergenceError("eigensolver sweep limit reached")
    return value


def _am(m, lam):
    return _mv(m, lam) + lam


def _hor(m):
    status, value, _lo, _hi, _iters, flat, nrm = _horizon(m, TOL_LAMBDA, TOL_FLAT)
    if status == 2:
        raise ConvergenceError("eigensolver sweep limit reached")
    if status == 1:
        raise NotNonexpansive("operator norm %r exceeds 1" % nrm)
    return value, flat, nrm


def _adj(m):
    return np.ascontiguousarray(m.conj().T)


def _infimum_slack(evaluate, x, lam, trials, rng):
    """Best decomposition slack; 0.0 stands for the trivial y=x, z=0."""
    base = evaluate(x, lam)
    best = 0.0
    dim = x.shape[0]
    for _ in range(trials):
        t = rng.random()
        s = rng.random()
        e = 0.25 * _ginibre_raw(rng, dim)
        y = _c(t * x + e)
        z = _c(x - y)
        mu = s * lam
        nu = lam - mu
        cand = evaluate(y, mu) + evaluate(z, nu) - base
        if cand < best:
            best = cand
    return best


def infimum_decomposition_check(x, lam, trials, seed=0):
    """Slack of the infimum decomposition bound for am at (x, lam).

    Tries ``trials`` random decompositions y + z = x, mu + nu = lam on
    top of the trivial one; a passing value is >= -1e-9. Violations are
    negative slacks.
    """
    m = as_element(x)
    lam = float(lam)
    rng = generator(trial_seed(seed, "infimum-decomposition", 0))
    return _infimum_slack(
        lambda w, l: augmented_moving_norm(w, l), m, lam, int(trials), rng
    )


def _trial_m_scaling(rng, kind, dim, cap):
    x = draw(kind, dim, cap, rng)
    lam = 2.0 * rng.random()
    c = 2.0 * rng.random()
    lhs = _mv(_c(c * x), c * lam)
    rhs = c * _mv(x, lam)
    return abs(lhs - rhs) / max(1.0, c)


def _trial_am_scaling(rng, kind, dim, cap):
    x = draw(kind, dim, cap, rng)
    lam = 2.0 * rng.random()
    c = 2.0 * rng.random()
    lhs = _am(_c(c * x), c * lam)
    rhs = c * _am(x, lam)
    return abs(lhs - rhs) / max(1.0, c)


def _trial_m_sum(rng, kind, dim, cap):
    x = draw(kind, dim, cap, rng)
    y = draw(kind, dim, cap, rng)
    lam = 2.0 * rng.random()
    mu = 2.0 * rng.random()
    return _mv(_c(x + y), lam + mu) - (_mv(x, lam) + _mv(y, mu))


def _trial_am_sum(rng, kind, dim, cap):
    x = draw(kind, dim, cap, rng)
    y = draw(kind, dim, cap, rng)
    lam = 2.0 * rng.random()
    mu = 2.0 * rng.random()
    return _am(_c(x + y), lam + mu) - (_am(x, lam) + _am(y, mu))


def _trial_m_infimum(rng, kind, dim, cap):
    x = draw(kind, dim, cap, rng)
    lam = 1.5 * rng.random()
    return -_infimum_slack(_mv, x, lam, 8, rng)


def _trial_am_infimum(rng, kind, dim, cap):
    x = draw(kind, dim, cap, rng)
    lam = 1.5 * rng.random()
    return -_infimum_slack(_am, x, lam, 8, rng)


def _trial_product(rng, kind, dim, cap):
    x = draw(kind, dim, cap, rng)
    y = draw(kind, dim, cap, rng)
    lam = 1.5 * rng.random()
    mu = 1.5 * rng.random()
    return _am(_c(x @ y), lam * mu) - _am(x, lam) * _am(y, mu)


def _trial_convexity(rng, kind, dim, cap):
    x = draw(kind, dim, cap, rng)
    a = 2.0 * rng.random()
    b = 2.0 * rng.random()
    t = rng.random()
    mid = t * a + (1.0 - t) * b
    return _am(x, mid) - (t * _am(x, a) + (1.0 - t) * _am(x, b))


def _trial_am_floor(rng, kind, dim, cap):
    x = draw(kind, dim, cap, rng)
    worst = -np.inf
    for _ in range(3):
        lam = 2.0 * rng.random()
        worst = max(worst, lam - _am(x, lam))
    return worst


def _trial_interior(rng, kind, dim, cap):
    x = draw(kind, dim, cap, rng)
    value, _flat, nrm = _hor(x)
    if value > 1e-6 and _am(x, 0.5 * value) < 1.0 - TOL_FLAT:
        return max(0.0, nrm - 1.0)
    return 0.0


def _trial_flat(rng, kind, dim, cap):
    x = draw(kind, dim, cap, rng)
    _value, flat, nrm = _hor(x)
    if flat:
        return abs(nrm - 1.0)
    return 0.0


def _trial_bound(rng, kind, dim, cap):
    x = draw(kind, dim, cap, rng)
    value, _flat, _nrm = _hor(x)
    return max(0.0, -value, value - 1.0)


def _trial_hor_sum(rng, kind, dim, cap):
    x = draw(kind, dim, cap, rng)
    y = draw(kind, dim, cap, rng)
    t = rng.random()
    hx, _, _ = _hor(x)
    hy, _, _ = _hor(y)
    hz, _, _ = _hor(_c(t * x + (1.0 - t) * y))
    return t * hx + (1.0 - t) * hy - hz


def _trial_hor_product(rng, kind, dim, cap):
    x = draw(kind, dim, cap, rng)
    y = draw(kind, dim, cap, rng)
    hx, _, _ = _hor(x)
    hy, _, _ = _hor(y)
    hxy, _, _ = _hor(x @ y)
    return hx * hy - hxy


def _trial_cstar_am(rng, kind, dim, cap):
    x = draw(kind, dim, cap, rng)
    lam = 1.5 * rng.random()
    xs = _adj(x)
    bound = _am(x, lam) ** 2
    lam2 = lam * lam
    return max(_am(xs @ x, lam2) - bound, _am(x @ xs, lam2) - bound)


def _trial_cstar_hor(rng, kind, dim, cap):
    x = draw(kind, dim, cap, rng)
    xs = _adj(x)
    hx, _, _ = _hor(x)
    left, _, _ = _hor(xs @ x)
    right, _, _ = _hor(x @ xs)
    square = hx * hx
    return max(square - left, square - right)


def _trial_adjoint(rng, kind, dim, cap):
    x = draw(kind, dim, cap, rng)
    hx, _, _ = _hor(x)
    hs, _, _ = _hor(_adj(x))
    return abs(hx - hs)


def _trial_unitary(rng, kind, dim, cap):
    u = draw(kind, dim, cap, rng)
    low = np.inf
    for lam in _GRID_LOWER:
        low = min(low, _am(u, lam) - 1.0)
    value, _flat, _nrm = _hor(u)
    # sample inside [0, Hor); the endpoint is the bisection's own
    # acceptance point and would only re-test the solver cut
    high = -np.inf
    for lam in np.linspace(0.0, value, _FLAT_POINTS + 1)[:-1]:
        high = max(high, _am(u, lam) - 1.0)
    return max(0.0, -low, high)


def _trial_hermitian_closed_form(rng, kind, dim, cap):
    h = draw(kind, dim, cap, rng)
    spectral = hermitian_range(h)
    worst = 0.0
    for lam in _GRID_CLOSED:
        gap = abs(_am(h, lam) - hermitian_am_closed_form(spectral, lam))
        worst = max(worst, gap)
    return worst


def _trial_hermitian_horizon(rng, kind, dim, cap):
    h = draw(kind, dim, cap, rng)
    spectral = hermitian_range(h)
    value, _flat, _nrm = _hor(h)
    return abs(value - (1.0 + spectral.lo) / 2.0)


def _trial_fne_equiv(rng, kind, dim, cap):
    a = draw(kind, dim, cap, rng)
    reflected = _c(2.0 * a - np.eye(dim))
    norm_a = _norm(a)
    norm_r = _norm(reflected)
    value, _flat, _nrm = _hor(a)
    if abs(norm_r - 1.0) <= _SKIP_BAND or abs(value - 0.5) <= _SKIP_BAND:
        return None
    by_norm = norm_a <= 1.0 + 1e-10 and norm_r <= 1.0 + 1e-10
    by_horizon = value >= 0.5 - 1e-8
    by_gap = fne_gap(a) >= -1e-8
    return 0.0 if by_norm == by_horizon == by_gap else 1.0


def _trial_fne_vectors(rng, kind, dim, cap):
    a = draw(kind, dim, cap, rng)
    v = rng.standard_normal((200, dim)) + 1j * rng.standard_normal((200, dim))
    v /= np.linalg.norm(v, axis=1, keepdims=True)
    return fne_inner_product_check(a, v)


@dataclass(frozen=True)
class Check:
    """One verifiable statement with its sampling plan and tolerance."""

    check_id: str
    kinds: tuple
    tolerance: float
    trial: object


@dataclass
class TheoremReport:
    """Aggregated result of all trials of one check."""

    check_id: str
    trials: int
    failures: int
    skipped: int
    worst_violation: float
    worst_seed: int
    worst_kind: str
    worst_dim: int
    tolerance: float

    def to_dict(self):
        return {
            "check_id": self.check_id,
            "trials": self.trials,
            "failures": self.failures,
            "skipped": self.skipped,
            "worst_violation": self.worst_violation,
            "worst_seed": self.worst_seed,
            "worst_kind": self.worst_kind,
            "worst_dim": self.worst_dim,
            "tolerance": self.tolerance,
        }


_ALL = KINDS
_PAIRABLE = ("ginibre", "hermitian")

CHECKS = (
    Check("eq4_scaling", _ALL, 1e-9, _trial_m_scaling),
    Check("eq5_sum", _PAIRABLE, 1e-9, _trial_m_sum),
    Check("eq6_infimum", ("ginibre",), 1e-9, _trial_m_infimum),
    Check("eq8_am_scaling", _ALL, 1e-9, _trial_am_scaling),
    Check("eq9_am_sum", _PAIRABLE, 1e-9, _trial_am_sum),
    Check("eq10_am_infimum", ("ginibre",), 1e-9, _trial_am_infimum),
    Check("eq12_product", ("ginibre", "unitary"), 1e-9, _trial_product),
    Check("thm_convexity", _ALL, 1e-9, _trial_convexity),
    Check("thm_am_floor", _ALL, 1e-12, _trial_am_floor),
    Check("eq14_interior", _ALL, 0.0, _trial_interior),
    Check("eq15_flat", _ALL, 1e-8, _trial_flat),
    Check("eq16_bound", _ALL, 0.0, _trial_bound),
    Check("thm_hor_sum", ("ginibre", "hermitian", "fne"), 1e-7, _trial_hor_sum),
    Check(
        "thm_hor_product",
        ("ginibre", "unitary", "projection"),
        1e-7,
        _trial_hor_product,
    ),
    Check("eq19_cstar", ("ginibre", "fne"), 1e-9, _trial_cstar_am),
    Check("eq20_cstar_hor", ("ginibre", "fne"), 1e-7, _trial_cstar_hor),
    Check("thm_adjoint", _ALL, 1e-8, _trial_adjoint),
    Check("thm_unitary", ("unitary",), 1e-9, _trial_unitary),
    Check(
        "thm_hermitian_closed_form",
        ("hermitian",),
        1e-8,
        _trial_hermitian_closed_form,
    ),
    Check("thm_hermitian_horizon", ("hermitian",), 1e-7, _trial_hermitian_horizon),
    Check("thm_fne_equiv", ("ginibre", "fne"), 0.0, _trial_fne_equiv),
    Check("eq29_fne_vectors", ("fne",), 1e-9, _trial_fne_vectors),
)

CHECK_INDEX = {check.check_id: check for check in CHECKS}
DEFAULT_TOLERANCES = {check.check_id: check.tolerance for check in CHECKS}


def default_specs(dims=DEFAULT_DIMS, count=DEFAULT_COUNT, seed=0, norm_cap=1.0):
    """One spec per (kind, dim) with a shared root seed."""
    return [
        EnsembleSpec(kind, int(dim), int(count), int(seed), float(norm_cap))
        for kind in KINDS
        for dim in dims
    ]


def run_all(specs, tolerances=None):
    """Run every check against the matching specs.

    Returns one TheoremReport per check, in registry order. Failures are
    data, not exceptions; rerunning with identical specs reproduces the
    reports bit for bit, and the reduction over trials (max violation,
    ties to the smaller substream id) does not depend on trial order.
    """
    tols = dict(DEFAULT_TOLERANCES)
    if tolerances:
        tols.update(tolerances)
    reports = []
    for check in CHECKS:
        tol = tols[check.check_id]
        trials = 0
        failures = 0
        skipped = 0
        found = False
        worst_violation = 0.0
        worst_seed = 0
        worst_kind = ""
        worst_dim = 0
        for spec in specs:
            if spec.kind not in check.kinds:
                continue
            label = "%s/%s/%d" % (check.check_id, spec.kind, spec.dim)
            for index in range(spec.count):
                substream = trial_seed(spec.seed, label, index)
                violation = check.trial(
                    generator(substream), spec.kind, spec.dim, spec.norm_cap
                )
                if violation is None:
                    skipped += 1
                    continue
                trials += 1
                if violation > tol:
                    failures += 1
                if (
                    not found
                    or violation > worst_violation
                    or (violation == worst_violation and substream < worst_seed)
                ):
                    found = True
                    worst_violation = violation
                    worst_seed = substream
                    worst_kind = spec.kind
                    worst_dim = spec.dim
        reports.append(
            TheoremReport(
                check_id=check.check_id,
                trials=trials,
                failures=failures,
                skipped=skipped,
                worst_violation=float(worst_violation),
                worst_seed=worst_seed,
                worst_kind=worst_kind,
                worst_dim=worst_dim,
                tolerance=tol,
            )
        )
    return reports


def replay_trial(check_id, seed, kind, dim, norm_cap=1.0):
    """Re-run one trial from its substream id; bitwise reproducible."""
    check = CHECK_INDEX[check_id]
    return check.trial(generator(seed), kind, int(dim), float(norm_cap))
