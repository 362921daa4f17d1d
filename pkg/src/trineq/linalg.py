"""Dense complex linear algebra sized for small quantum problems.

Everything here runs through the package's own cyclic Jacobi eigensolver
(matrices are at most DIMENSION_CAP square, so robustness beats asymptotic
speed).  Eigenvalues and singular values are always returned in descending
order, ties broken by original index.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from . import kernels
from .errors import LemmaViolation, NoConvergence, NotHermitian, NotPSD, NotSymmetric
from .tolerances import (
    HERMITICITY_ATOL,
    JACOBI_MAX_SWEEPS,
    JACOBI_OFFDIAG_TOL,
    LEMMA_SLACK,
    PSD_EIG_FLOOR,
    SYM2_SYMMETRY_ATOL,
)


class SingularPair2(NamedTuple):
    """Descending singular-value pair of a 2x2 matrix."""

    sigma1: float
    sigma2: float


def as_complex_matrix(m) -> np.ndarray:
    """Coerce to a finite complex128 2-D array."""
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got ndim={a.ndim}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix contains NaN or Inf entries")
    return a


def hermitian_eigensystem(
    m, *, max_sweeps: int = JACOBI_MAX_SWEEPS, offdiag_tol: float = JACOBI_OFFDIAG_TOL
):
    """Eigendecomposition of a Hermitian matrix.

    Parameters
    ----------
    m : array_like
        Square matrix with ``max |m - m†|`` at most ``HERMITICITY_ATOL``.
    max_sweeps, offdiag_tol : optional
        Jacobi sweep budget and off-diagonal Frobenius norm at which the
        iteration stops.  Callers that take square roots of the spectrum pass
        a tighter ``offdiag_tol``; the default resolves eigenvalues to far
        better than the 1e-9 contract.

    Returns
    -------
    (w, v)
        Eigenvalues in descending order and the matching orthonormal
        eigenvectors as the columns of ``v``.

    Raises
    ------
    NotHermitian
        If ``m`` is not square or deviates from its adjoint beyond tolerance.
    NoConvergence
        If the Jacobi sweep budget is exhausted.
    """
    a = as_complex_matrix(m)
    if a.shape[0] != a.shape[1]:
        raise NotHermitian(f"matrix is not square: shape {a.shape}")
    dev = float(np.max(np.abs(a - a.conj().T))) if a.size else 0.0
    if dev > HERMITICITY_ATOL:
        raise NotHermitian(f"max |m - m†| = {dev:.3e} exceeds {HERMITICITY_ATOL:.1e}")
    h = (a + a.conj().T) / 2.0
    w, v, converged = kernels.jacobi_eigh(h, max_sweeps, offdiag_tol)
    if not converged:
        raise NoConvergence(f"Jacobi solver did not converge in {max_sweeps} sweeps")
    order = np.argsort(-w, kind="stable")
    return w[order], v[:, order]


def psd_sqrt(m, *, offdiag_tol: float = JACOBI_OFFDIAG_TOL) -> np.ndarray:
    """Principal square root of a Hermitian positive semidefinite matrix.

    Eigenvalues in [PSD_EIG_FLOOR, 0) are clipped to zero; anything below the
    floor raises NotPSD.
    """
    w, v = hermitian_eigensystem(m, offdiag_tol=offdiag_tol)
    if w[-1] < PSD_EIG_FLOOR:
        raise NotPSD(f"smallest eigenvalue {w[-1]:.3e} below {PSD_EIG_FLOOR:.1e}")
    s = (v * np.sqrt(np.clip(w, 0.0, None))) @ v.conj().T
    return (s + s.conj().T) / 2.0


def singular_values(m) -> np.ndarray:
    """Singular values of ``m``: square roots of the eigenvalues of m†m, descending."""
    a = as_complex_matrix(m)
    gram = a.conj().T @ a
    w, _ = hermitian_eigensystem(gram)
    return np.sqrt(np.clip(w, 0.0, None))


def symmetric2_svd_gap(t) -> tuple[float, SingularPair2]:
    """Diagonal-magnitude gap and singular values of a 2x2 complex symmetric matrix.

    Returns ``(| |t00| - |t11| |, (sigma1, sigma2))`` and asserts the bound
    ``| |t00| - |t11| | <= sigma1 - sigma2 + LEMMA_SLACK``, which holds for
    every complex symmetric 2x2 matrix; a violation means a numerical bug and
    raises LemmaViolation.
    """
    a = as_complex_matrix(t)
    if a.shape != (2, 2):
        raise NotSymmetric(f"expected a 2x2 matrix, got shape {a.shape}")
    if abs(a[0, 1] - a[1, 0]) > SYM2_SYMMETRY_ATOL:
        raise NotSymmetric(
            f"|t01 - t10| = {abs(a[0, 1] - a[1, 0]):.3e} exceeds {SYM2_SYMMETRY_ATOL:.1e}"
        )
    x12 = (a[0, 1] + a[1, 0]) / 2.0
    s1, s2 = kernels.sym2_singular_values(complex(a[0, 0]), complex(x12), complex(a[1, 1]))
    gap = abs(abs(a[0, 0]) - abs(a[1, 1]))
    if gap > s1 - s2 + LEMMA_SLACK:
        raise LemmaViolation(
            f"diagonal gap {gap!r} exceeds singular gap {s1 - s2!r} beyond slack"
        )
    return gap, SingularPair2(s1, s2)
