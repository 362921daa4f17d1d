# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled numerical kernels.

Same API and math as trineq._pykernels; the cyclic Jacobi eigensolver and the
minor-sum concurrence are the hot inner loops of the Monte Carlo campaigns.
"""

import numpy as np

from libc.math cimport hypot, sqrt

cdef extern from "<complex.h>" nogil:
    double complex conj(double complex)
    double cabs(double complex)


def jacobi_eigh(a_in, int max_sweeps=100, double offdiag_tol=1e-12):
    """Cyclic Jacobi diagonalization of a complex Hermitian matrix.

    Returns (unsorted eigenvalues, eigenvector columns, converged flag); see
    the pure-Python twin for the full contract.
    """
    a = np.array(a_in, dtype=np.complex128, order="C", copy=True)
    cdef Py_ssize_t n = a.shape[0]
    v = np.eye(n, dtype=np.complex128)
    cdef double complex[:, ::1] am = a
    cdef double complex[:, ::1] vm = v
    cdef bint converged = _jacobi_loop(am, vm, n, max_sweeps, offdiag_tol)
    w = np.ascontiguousarray(np.real(np.diagonal(a)))
    return w, v, bool(converged)


cdef double _offdiag_norm(double complex[:, ::1] a, Py_ssize_t n) nogil:
    cdef Py_ssize_t i, j
    cdef double acc = 0.0, m
    for i in range(n):
        for j in range(n):
            if i != j:
                m = cabs(a[i, j])
                acc += m * m
    return sqrt(acc)


cdef bint _jacobi_loop(double complex[:, ::1] a, double complex[:, ::1] v,
                       Py_ssize_t n, int max_sweeps, double offdiag_tol) nogil:
    cdef Py_ssize_t p, q, i
    cdef int sweep
    cdef double m, app, aqq, tau, t, c, s
    cdef double complex apq, u, su, suc, xp, xq
    for sweep in range(max_sweeps + 1):
        if _offdiag_norm(a, n) < offdiag_tol:
            return True
        if sweep == max_sweeps:
            return False
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                m = cabs(apq)
                if m == 0.0:
                    continue
                app = a[p, p].real
                aqq = a[q, q].real
                tau = (aqq - app) / (2.0 * m)
                if tau >= 0.0:
                    t = -1.0 / (tau + hypot(1.0, tau))
                else:
                    t = 1.0 / (-tau + hypot(1.0, tau))
                c = 1.0 / sqrt(1.0 + t * t)
                s = t * c
                u = apq / m
                su = s * u
                suc = s * conj(u)
                for i in range(n):
                    xp = a[i, p]
                    xq = a[i, q]
                    a[i, p] = c * xp + suc * xq
                    a[i, q] = -su * xp + c * xq
                for i in range(n):
                    xp = a[p, i]
                    xq = a[q, i]
                    a[p, i] = c * xp + su * xq
                    a[q, i] = -suc * xp + c * xq
                a[p, q] = 0.0
                a[q, p] = 0.0
                for i in range(n):
                    xp = v[i, p]
                    xq = v[i, q]
                    v[i, p] = c * xp + suc * xq
                    v[i, q] = -su * xp + c * xq
    return False


def sym2_singular_values(x11, x12, x22):
    """Singular values (descending) of [[x11, x12], [x12, x22]], closed form."""
    cdef double complex a = x11, b = x12, d = x22, g12
    cdef double g11, g22, disc, mu1, s1, s2
    g11 = cabs(a) ** 2 + cabs(b) ** 2
    g22 = cabs(b) ** 2 + cabs(d) ** 2
    g12 = conj(a) * b + conj(b) * d
    disc = (g11 - g22) ** 2 + 4.0 * cabs(g12) ** 2
    if disc < 0.0:
        disc = 0.0
    disc = sqrt(disc)
    mu1 = 0.5 * (g11 + g22 + disc)
    if mu1 < 0.0:
        mu1 = 0.0
    s1 = sqrt(mu1)
    if s1 == 0.0:
        return 0.0, 0.0
    s2 = cabs(a * d - b * b) / s1
    if s2 > s1:
        s2 = s1
    return s1, s2


def pure_concurrence_sq(phi, int d1, int d2) -> float:
    """Squared pure-state concurrence as 4 * sum of squared 2x2 minors."""
    f = np.ascontiguousarray(phi, dtype=np.complex128).reshape(-1)
    cdef double complex[::1] fm = f
    cdef Py_ssize_t i, j, k, l
    cdef double complex minor
    cdef double total = 0.0, m
    for i in range(d1 - 1):
        for j in range(i + 1, d1):
            for k in range(d2 - 1):
                for l in range(k + 1, d2):
                    minor = fm[i * d2 + k] * fm[j * d2 + l] - fm[i * d2 + l] * fm[j * d2 + k]
                    m = cabs(minor)
                    total += m * m
    return 4.0 * total
