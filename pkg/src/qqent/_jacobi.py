"""Cyclic complex Jacobi eigensolver for stacks of small Hermitian matrices.

Two implementations share one rotation scheme:

* ``jacobi_numba`` loops over the stack with scalar code compiled by numba.
* ``jacobi_numpy`` applies each (p, q) rotation to the whole stack at once.

Each matrix is processed independently (a converged matrix receives no
further rotations), so the result for one matrix never depends on which
other matrices share its batch.

For a pivot a_pq = |a_pq| e^{i phi} the rotation is J = diag(1, e^{-i phi}) R,
where R is the real Jacobi rotation annihilating the now real off-diagonal
entry. The update is A <- J^H A J and V <- V J.
"""
import numpy as np

from ._accel import USE_NUMBA, njit

TOL = 1e-13
MAX_SWEEPS = 100


@njit(cache=True, nogil=True)
def _jacobi_one(a, v, tol, max_sweeps):
    n = a.shape[0]
    for _ in range(max_sweeps):
        off = 0.0
        for i in range(n):
            for j in range(n):
                if i != j:
                    off += a[i, j].real ** 2 + a[i, j].imag ** 2
        if np.sqrt(off) < tol:
            return
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                mag = abs(apq)
                if mag == 0.0:
                    continue
                ph = np.conj(apq / mag)
                app = a[p, p].real
                aqq = a[q, q].real
                tau = (aqq - app) / (2.0 * mag)
                if tau >= 0.0:
                    t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                jpp = c + 0j
                jpq = s + 0j
                jqp = -s * ph
                jqq = c * ph
                for k in range(n):
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = akp * jpp + akq * jqp
                    a[k, q] = akp * jpq + akq * jqq
                for k in range(n):
                    apk = a[p, k]
                    aqk = a[q, k]
                    a[p, k] = np.conj(jpp) * apk + np.conj(jqp) * aqk
                    a[q, k] = np.conj(jpq) * apk + np.conj(jqq) * aqk
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = app - t * mag
                a[q, q] = aqq + t * mag
                for k in range(n):
                    vkp = v[k, p]
                    vkq = v[k, q]
                    v[k, p] = vkp * jpp + vkq * jqp
                    v[k, q] = vkp * jpq + vkq * jqq


@njit(cache=True, nogil=True)
def _jacobi_stack_numba(a, tols, max_sweeps):
    nb = a.shape[0]
    n = a.shape[1]
    v = np.zeros_like(a)
    w = np.empty((nb, n))
    for b in range(nb):
        for i in range(n):
            v[b, i, i] = 1.0
        _jacobi_one(a[b], v[b], tols[b], max_sweeps)
        for i in range(n):
            w[b, i] = a[b, i, i].real
    return w, v


def _tolerances(a):
    # Absolute 1e-13 for O(1) matrices; scaled so large-norm inputs can converge.
    norms = np.sqrt(np.sum(np.abs(a) ** 2, axis=(1, 2)))
    return TOL * np.maximum(1.0, norms)


def jacobi_numba(a, max_sweeps=MAX_SWEEPS):
    """Unsorted eigenpairs of a (batch, n, n) Hermitian stack via the numba kernel."""
    a = np.array(a, dtype=np.complex128, copy=True, order="C")
    return _jacobi_stack_numba(a, _tolerances(a), max_sweeps)


def jacobi_numpy(a, max_sweeps=MAX_SWEEPS):
    """Unsorted eigenpairs of a (batch, n, n) Hermitian stack, vectorized over the batch."""
    a = np.array(a, dtype=np.complex128, copy=True)
    nb, n, _ = a.shape
    v = np.zeros_like(a)
    v[:, np.arange(n), np.arange(n)] = 1.0
    tols = _tolerances(a)
    offmask = ~np.eye(n, dtype=bool)
    active = np.ones(nb, dtype=bool)
    for _ in range(max_sweeps):
        off = np.sqrt(np.sum(np.abs(a[:, offmask]) ** 2, axis=1))
        active &= ~(off < tols)
        if not active.any():
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[:, p, q]
                mag = np.abs(apq)
                rot = active & (mag != 0.0)
                if not rot.any():
                    continue
                safe = np.where(rot, mag, 1.0)
                ph = np.where(rot, np.conj(apq / safe), 1.0 + 0j)
                # .real is a view into a; copy before a is rotated
                app = a[:, p, p].real.copy()
                aqq = a[:, q, q].real.copy()
                tau = (aqq - app) / (2.0 * safe)
                t = np.sign(tau) / (np.abs(tau) + np.sqrt(1.0 + tau * tau))
                t = np.where(tau == 0.0, 1.0, t)
                t = np.where(rot, t, 0.0)
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                jpp = (c + 0j)[:, None]
                jpq = (s + 0j)[:, None]
                jqp = (-s * ph)[:, None]
                jqq = (c * ph)[:, None]

                akp = a[:, :, p].copy()
                akq = a[:, :, q].copy()
                a[:, :, p] = akp * jpp + akq * jqp
                a[:, :, q] = akp * jpq + akq * jqq
                apk = a[:, p, :].copy()
                aqk = a[:, q, :].copy()
                a[:, p, :] = np.conj(jpp) * apk + np.conj(jqp) * aqk
                a[:, q, :] = np.conj(jpq) * apk + np.conj(jqq) * aqk
                a[:, p, q] = np.where(rot, 0.0, a[:, p, q])
                a[:, q, p] = np.where(rot, 0.0, a[:, q, p])
                a[:, p, p] = np.where(rot, app - t * mag, a[:, p, p])
                a[:, q, q] = np.where(rot, aqq + t * mag, a[:, q, q])

                vkp = v[:, :, p].copy()
                vkq = v[:, :, q].copy()
                v[:, :, p] = vkp * jpp + vkq * jqp
                v[:, :, q] = vkp * jpq + vkq * jqq
    w = np.real(a[:, np.arange(n), np.arange(n)]).copy()
    return w, v


def sort_eigenpairs(w, v):
    """Ascending order; ties keep the Jacobi output order."""
    order = np.argsort(w, axis=-1, kind="stable")
    w = np.take_along_axis(w, order, axis=-1)
    v = np.take_along_axis(v, order[:, None, :], axis=-1)
    return w, v


def jacobi_eigh(a):
    """Sorted eigenpairs of a Hermitian stack with the active backend."""
    kernel = jacobi_numba if USE_NUMBA else jacobi_numpy
    return sort_eigenpairs(*kernel(a))
