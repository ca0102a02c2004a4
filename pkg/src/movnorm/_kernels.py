"""Jit-compiled numerical kernels shared by the public modules.

Everything here works on C-contiguous complex128 arrays and is
deterministic: no RNG, no threading, fixed pivot order.
"""

import numpy as np
from numba import njit

_MAX_SWEEPS = 100


@njit(cache=True)
def _jacobi_eigvalsh(h):
    """Eigenvalues of a Hermitian matrix by cyclic Jacobi rotations.

    ``h`` is destroyed. Returns ``(eigenvalues ascending, converged)``.
    Sweeps run until the off-diagonal squared Frobenius mass drops to
    1e-28 of the total squared mass.
    """
    n = h.shape[0]
    if n == 1:
        out = np.empty(1)
        out[0] = h[0, 0].real
        return out, True
    scale = 0.0
    for i in range(n):
        for j in range(n):
            v = h[i, j]
            scale += v.real * v.real + v.imag * v.imag
    eigs = np.empty(n)
    if scale == 0.0:
        for i in range(n):
            eigs[i] = 0.0
        return eigs, True
    thresh = 1e-28 * scale
    # pivots this far below the target mass cannot delay convergence
    skip = thresh / (2.0 * n * n)
    done = False
    for _ in range(_MAX_SWEEPS):
        off = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                v = h[p, q]
                off += 2.0 * (v.real * v.real + v.imag * v.imag)
        if off <= thresh:
            done = True
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                beta = h[p, q]
                b2 = beta.real * beta.real + beta.imag * beta.imag
                if b2 <= skip:
                    continue
                b = np.sqrt(b2)
                phase = beta / b
                alpha = h[p, p].real
                gamma = h[q, q].real
                tau = (gamma - alpha) / (2.0 * b)
                if np.abs(tau) > 1e150:
                    # 1/(|tau|+sqrt(1+tau^2)) underflows; use the limit form
                    t = 1.0 / (2.0 * tau)
                elif tau >= 0.0:
                    t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                h[p, p] = complex(alpha - t * b, 0.0)
                h[q, q] = complex(gamma + t * b, 0.0)
                h[p, q] = complex(0.0, 0.0)
                h[q, p] = complex(0.0, 0.0)
                cp = c * phase
                sp = s * phase
                for i in range(n):
                    if i == p or i == q:
                        continue
                    aip = h[i, p]
                    aiq = h[i, q]
                    nip = cp * aip - s * aiq
                    niq = sp * aip + c * aiq
                    h[i, p] = nip
                    h[i, q] = niq
                    h[p, i] = np.conj(nip)
                    h[q, i] = np.conj(niq)
    if not done:
        off = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                v = h[p, q]
                off += 2.0 * (v.real * v.real + v.imag * v.imag)
        done = off <= thresh
    for i in range(n):
        eigs[i] = h[i, i].real
    return np.sort(eigs), done


@njit(cache=True)
def _hermitian_part(x):
    """(x + x*)/2 as a fresh, exactly Hermitian matrix."""
    n = x.shape[0]
    h = np.empty((n, n), dtype=np.complex128)
    for i in range(n):
        h[i, i] = complex(x[i, i].real, 0.0)
        for j in range(i + 1, n):
            v = 0.5 * (x[i, j] + np.conj(x[j, i]))
            h[i, j] = v
            h[j, i] = np.conj(v)
    return h


@njit(cache=True)
def _gram(m):
    """m* m, built from the upper triangle so it is exactly Hermitian."""
    n = m.shape[0]
    h = np.empty((n, n), dtype=np.complex128)
    for i in range(n):
        for j in range(i, n):
            acc = complex(0.0, 0.0)
            for k in range(n):
                acc += np.conj(m[k, i]) * m[k, j]
            if i == j:
                h[i, i] = complex(acc.real, 0.0)
            else:
                h[i, j] = acc
                h[j, i] = np.conj(acc)
    return h


@njit(cache=True)
def _eigvalsh(x):
    """Eigenvalues of the Hermitian part of x, ascending."""
    return _jacobi_eigvalsh(_hermitian_part(x))


@njit(cache=True)
def _opnorm(m):
    """Spectral norm via the top eigenvalue of m* m."""
    eigs, ok = _jacobi_eigvalsh(_gram(m))
    top = eigs[eigs.shape[0] - 1]
    if top < 0.0:
        top = 0.0
    return np.sqrt(top), ok


@njit(cache=True)
def _moving(m, lam):
    """Operator norm of m - lam*I."""
    n = m.shape[0]
    w = m.copy()
    for i in range(n):
        w[i, i] = w[i, i] - lam
    return _opnorm(w)


@njit(cache=True)
def _horizon(m, tol_lam, tol_flat):
    """Largest lam in [0, 1] with am(lam) <= 1 + tol_flat, by bisection.

    Returns ``(status, value, lo, hi, iterations, flat, norm)`` where
    status 0 means ok, 1 means the norm precondition failed and 2 means
    the eigensolver stalled. The predicate am(lam) > 1 + tol_flat is
    monotone because am is convex, starts <= 1 and dominates lam.
    """
    nrm, ok = _opnorm(m)
    if not ok:
        return 2, 0.0, 0.0, 0.0, 0, False, nrm
    if nrm > 1.0 + 1e-10:
        return 1, 0.0, 0.0, 0.0, 0, False, nrm
    mv, ok = _moving(m, 1.0)
    if not ok:
        return 2, 0.0, 0.0, 0.0, 0, False, nrm
    iters = 0
    if mv + 1.0 <= 1.0 + tol_flat:
        value = 1.0
        lo = 1.0
        hi = 1.0
    else:
        lo = 0.0
        hi = 1.0
        while hi - lo > tol_lam:
            mid = 0.5 * (lo + hi)
            mv, ok = _moving(m, mid)
            if not ok:
                return 2, 0.0, lo, hi, iters, False, nrm
            iters += 1
            if mv + mid > 1.0 + tol_flat:
                hi = mid
            else:
                lo = mid
        value = lo
    flat = False
    if value > 1e-8:
        mv, ok = _moving(m, 0.5 * value)
        if not ok:
            return 2, 0.0, lo, hi, iters, False, nrm
        if mv + 0.5 * value >= 1.0 - tol_flat:
            flat = True
    return 0, value, lo, hi, iters, flat, nrm
