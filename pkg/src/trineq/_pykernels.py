"""Pure-Python (numpy) implementations of the numerical kernels.

This module mirrors the API of the compiled extension ``trineq._fastkernels``
and is selected automatically when the extension is not built.  The math is
identical; only the inner loops differ.
"""

from __future__ import annotations

import numpy as np


def _offdiag_norm(a: np.ndarray) -> float:
    # sum only the off-diagonal entries; subtracting the diagonal from the
    # total cancels catastrophically and cannot resolve tight tolerances
    off = a.copy()
    np.fill_diagonal(off, 0.0)
    return float(np.sqrt(np.sum(np.abs(off) ** 2)))


def jacobi_eigh(a, max_sweeps: int = 100, offdiag_tol: float = 1e-12):
    """Cyclic Jacobi diagonalization of a complex Hermitian matrix.

    Parameters
    ----------
    a : (n, n) complex ndarray
        Hermitian input (the caller is responsible for symmetrizing).
    max_sweeps : int
        Sweep budget; a sweep rotates every strict upper-triangle pair once.
    offdiag_tol : float
        Converged when the off-diagonal Frobenius norm drops below this.

    Returns
    -------
    (w, v, converged)
        Unsorted real eigenvalues, eigenvectors as columns of ``v``, and a
        convergence flag.
    """
    a = np.array(a, dtype=np.complex128, copy=True)
    n = a.shape[0]
    v = np.eye(n, dtype=np.complex128)
    converged = False
    for sweep in range(max_sweeps + 1):
        if _offdiag_norm(a) < offdiag_tol:
            converged = True
            break
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                m = abs(apq)
                if m == 0.0:
                    continue
                app = a[p, p].real
                aqq = a[q, q].real
                tau = (aqq - app) / (2.0 * m)
                if tau >= 0.0:
                    t = -1.0 / (tau + np.hypot(1.0, tau))
                else:
                    t = 1.0 / (-tau + np.hypot(1.0, tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                u = apq / m
                su = s * u
                suc = s * np.conj(u)
                # column rotation: A <- A J
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p + suc * col_q
                a[:, q] = -su * col_p + c * col_q
                # row rotation: A <- J† A
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p + su * row_q
                a[q, :] = -suc * row_p + c * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
                # accumulate eigenvectors: V <- V J
                vcol_p = v[:, p].copy()
                vcol_q = v[:, q].copy()
                v[:, p] = c * vcol_p + suc * vcol_q
                v[:, q] = -su * vcol_p + c * vcol_q
    w = np.ascontiguousarray(np.real(np.diagonal(a)))
    return w, v, converged


def sym2_singular_values(x11: complex, x12: complex, x22: complex):
    """Singular values of the 2x2 complex symmetric matrix [[x11, x12], [x12, x22]].

    Closed form via the Gram matrix; the smaller value is recovered from the
    determinant (sigma1 * sigma2 = |det|) to avoid cancellation.
    Returns (sigma1, sigma2) with sigma1 >= sigma2 >= 0.
    """
    g11 = abs(x11) ** 2 + abs(x12) ** 2
    g22 = abs(x12) ** 2 + abs(x22) ** 2
    g12 = np.conj(x11) * x12 + np.conj(x12) * x22
    disc = np.sqrt(max((g11 - g22) ** 2 + 4.0 * abs(g12) ** 2, 0.0))
    mu1 = 0.5 * (g11 + g22 + disc)
    s1 = float(np.sqrt(max(mu1, 0.0)))
    if s1 == 0.0:
        return 0.0, 0.0
    s2 = abs(x11 * x22 - x12 * x12) / s1
    return s1, float(min(s2, s1))


def pure_concurrence_sq(phi, d1: int, d2: int) -> float:
    """Squared pure-state concurrence as the explicit sum over 2x2 minors.

    ``phi`` is the (sub)normalized amplitude vector in the row-major |ij>
    basis; the result is 4 * sum_{i<j, k<l} |phi_ik phi_jl - phi_il phi_jk|^2.
    """
    a = np.asarray(phi, dtype=np.complex128).reshape(d1, d2)
    total = 0.0
    for i in range(d1 - 1):
        for j in range(i + 1, d1):
            b = np.outer(a[i], a[j])
            m = b - b.T
            # sum over k<l of |minor|^2 equals half the squared Frobenius norm
            total += 0.5 * float(np.sum(np.abs(m) ** 2))
    return 4.0 * total
