"""Entanglement concurrence: pure states, the 2-qubit closed form, and the
rank-2 overlap-matrix route with its triangle inequality.

Weighting convention: concurrence is quadratic in amplitudes, so for a
subnormalized vector sqrt(p)|psi> the value is p * C(|psi>).  All weighted
quantities below follow this convention; it is what makes the triangle
inequality three comparable numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import kernels, linalg, states
from .errors import FormulaMismatch, IndexOutOfRange, NotSymmetric, WrongShape
from .report import InequalityReport
from .states import BipartiteShape, DensityMatrix, PureState, Rank2Ensemble
from .tolerances import (
    FORMULA_MISMATCH_ATOL,
    SPECTRUM_ABS_FLOOR,
    TAU_SYMMETRY_ATOL,
    WOOTTERS_OFFDIAG_TOL,
)


class GeneratorPair(NamedTuple):
    """Index pairs (i, j) with i < j and (k, l) with k < l selecting the
    antisymmetric generators |i><j| - |j><i| on each subsystem (0-based)."""

    m_index: tuple[int, int]
    n_index: tuple[int, int]


def generator_pairs(shape: BipartiteShape) -> tuple[GeneratorPair, ...]:
    """All D1 * D2 generator pairs of a shape, in lexicographic order."""
    ms = [(i, j) for i in range(shape.d1) for j in range(i + 1, shape.d1)]
    ns = [(k, l) for k in range(shape.d2) for l in range(k + 1, shape.d2)]
    return tuple(GeneratorPair(m, n) for m in ms for n in ns)


@dataclass(frozen=True, eq=False)
class TauMatrix:
    """2x2 complex symmetric matrix of spin-flip (or generator) overlaps."""

    entries: np.ndarray
    generator: GeneratorPair | None = None

    def __post_init__(self):
        m = np.asarray(self.entries, dtype=np.complex128)
        object.__setattr__(self, "entries", m)
        if m.shape != (2, 2):
            raise NotSymmetric(f"tau must be 2x2, got {m.shape}")
        if abs(m[0, 1] - m[1, 0]) > TAU_SYMMETRY_ATOL:
            raise NotSymmetric(f"tau is not symmetric: |t01 - t10| = {abs(m[0, 1] - m[1, 0]):.3e}")

    def singular_values(self) -> linalg.SingularPair2:
        _, pair = linalg.symmetric2_svd_gap(self.entries)
        return pair


def pure_concurrence(psi: PureState) -> float:
    """Concurrence of a pure state, scaled linearly by its weight.

    Computes both the reduced-purity form sqrt(2 (1 - Tr rho_A^2)) and the
    explicit minor sum, raising FormulaMismatch if they disagree beyond
    tolerance, and returns the purity-form value times the weight.
    """
    a = psi.as_matrix()
    rho_a = a @ a.conj().T
    purity = float(np.real(np.sum(rho_a * rho_a.conj())))
    c_purity = float(np.sqrt(max(2.0 * (1.0 - purity), 0.0)))
    c_sq_sum = kernels.pure_concurrence_sq(psi.amplitudes, psi.shape.d1, psi.shape.d2)
    c_sum = float(np.sqrt(max(c_sq_sum, 0.0)))
    if abs(c_purity - c_sum) > FORMULA_MISMATCH_ATOL:
        raise FormulaMismatch(
            f"purity form {c_purity!r} and minor-sum form {c_sum!r} disagree"
        )
    return psi.weight * c_purity


def _require_two_qubit(shape: BipartiteShape):
    if not shape.is_two_qubit:
        raise WrongShape(f"operation requires a 2x2 shape, got {shape}")


def wootters_concurrence(rho: DensityMatrix, *, route: str = "spectral") -> float:
    """Closed-form 2-qubit concurrence max{0, l1 - l2 - l3 - l4}.

    The l_i are the descending square roots of the eigenvalues of
    sqrt(rho) rho~ sqrt(rho), with rho~ the spin-flipped state.  Eigenvalues
    below SPECTRUM_ABS_FLOOR are zeroed first: the square root turns their
    float noise into ~1e-8 errors on rank-deficient states otherwise.  ``route`` selects how the l_i are extracted: "spectral" takes
    square roots of the clipped eigenvalues directly, "R" rebuilds the PSD
    square root and diagonalizes it again as a cross-check.
    """
    _require_two_qubit(rho.shape)
    flipped = states.spin_flip(rho)
    root = linalg.psd_sqrt(rho.matrix, offdiag_tol=WOOTTERS_OFFDIAG_TOL)
    m = root @ flipped @ root
    m = (m + m.conj().T) / 2.0
    w, v = linalg.hermitian_eigensystem(m, offdiag_tol=WOOTTERS_OFFDIAG_TOL)
    w = np.clip(w, 0.0, None)
    w[w < SPECTRUM_ABS_FLOOR] = 0.0
    if route == "spectral":
        lam = np.sqrt(w)
    elif route == "R":
        r = (v * np.sqrt(w)) @ v.conj().T
        lam, _ = linalg.hermitian_eigensystem(
            (r + r.conj().T) / 2.0, offdiag_tol=WOOTTERS_OFFDIAG_TOL
        )
        lam = np.clip(lam, 0.0, None)
    else:
        raise ValueError(f"unknown route {route!r}")
    return max(0.0, float(lam[0] - lam[1] - lam[2] - lam[3]))


def tau_2qubit(e: Rank2Ensemble) -> TauMatrix:
    """Overlap matrix tau_ab = <Psi_a| (sy x sy) |Psi_b*> of the subnormalized pair."""
    _require_two_qubit(e.shape)
    sub = e.subnormalized_pair()
    flipped = states.SIGMA_Y2 @ sub.conj().T  # columns are the flipped vectors
    entries = sub.conj() @ flipped
    entries[1, 0] = entries[0, 1]  # symmetric by construction; kill rounding drift
    return TauMatrix(entries, None)


def rank2_concurrence_2qubit(e: Rank2Ensemble) -> float:
    """Concurrence of a rank-2 2-qubit mixture as the singular gap of tau."""
    _, pair = linalg.symmetric2_svd_gap(tau_2qubit(e).entries)
    return pair.sigma1 - pair.sigma2


def _check_generator(shape: BipartiteShape, g: GeneratorPair):
    (i, j), (k, l) = g.m_index, g.n_index
    if not (0 <= i < j < shape.d1):
        raise IndexOutOfRange(f"m_index {g.m_index} invalid for d1={shape.d1}")
    if not (0 <= k < l < shape.d2):
        raise IndexOutOfRange(f"n_index {g.n_index} invalid for d2={shape.d2}")


def _tau_mn_entry(a_mat: np.ndarray, b_mat: np.ndarray, g: GeneratorPair) -> complex:
    # <a| L_m (x) L_n |b*> for (sub)normalized matrices a, b of shape (d1, d2)
    (i, j), (k, l) = g.m_index, g.n_index
    raw = (
        a_mat[i, k] * b_mat[j, l]
        - a_mat[i, l] * b_mat[j, k]
        - a_mat[j, k] * b_mat[i, l]
        + a_mat[j, l] * b_mat[i, k]
    )
    return complex(np.conj(raw))


def tau_mn(e: Rank2Ensemble, g: GeneratorPair) -> TauMatrix:
    """Generator-pair overlap matrix <Psi_a| L_m x L_n |Psi_b*> (2x2 symmetric)."""
    _check_generator(e.shape, g)
    sub = e.subnormalized_pair()
    a1 = sub[0].reshape(e.shape.d1, e.shape.d2)
    a2 = sub[1].reshape(e.shape.d1, e.shape.d2)
    t11 = _tau_mn_entry(a1, a1, g)
    t12 = _tau_mn_entry(a1, a2, g)
    t22 = _tau_mn_entry(a2, a2, g)
    return TauMatrix(np.array([[t11, t12], [t12, t22]]), g)


def highdim_lower_bound(e: Rank2Ensemble) -> float:
    """Lower bound on the mixture concurrence from all generator-pair gaps.

    Returns sqrt(sum over generator pairs of (sigma1 - sigma2)^2), where the
    sigmas are the singular values of each 2x2 overlap matrix.  For a 2x2
    shape this equals the exact rank-2 concurrence (single generator pair).
    """
    total = 0.0
    for g in generator_pairs(e.shape):
        _, pair = linalg.symmetric2_svd_gap(tau_mn(e, g).entries)
        total += (pair.sigma1 - pair.sigma2) ** 2
    return float(np.sqrt(total))


def weighted_pure_concurrences(e: Rank2Ensemble) -> tuple[float, float]:
    """(p1 * C(psi1), p2 * C(psi2)) for the ensemble members."""
    return (
        e.p1 * pure_concurrence(e.psi1),
        e.p2 * pure_concurrence(e.psi2),
    )


def triangle_check_concurrence(e: Rank2Ensemble) -> InequalityReport:
    """Check |C(Psi1) - C(Psi2)| <= C <= C(Psi1) + C(Psi2) for the mixture.

    The middle quantity is the exact rank-2 concurrence for 2x2 shapes and
    the generator-pair lower bound otherwise (in which case the chain tested
    is lower <= bound and bound <= upper, never an exact concurrence claim).
    """
    c1, c2 = weighted_pure_concurrences(e)
    lower, upper = abs(c1 - c2), c1 + c2
    if e.shape.is_two_qubit:
        middle = rank2_concurrence_2qubit(e)
        kind = "exact"
    else:
        middle = highdim_lower_bound(e)
        kind = "lower-bound"
    context = f"triangle-concurrence[{kind}] shape={e.shape.d1}x{e.shape.d2} p1={e.p1:.12g}"
    return InequalityReport.from_bounds(lower, middle, upper, context=context)


def ensemble_average_concurrence(e: Rank2Ensemble) -> float:
    """Decomposition average p1 C(psi1) + p2 C(psi2)."""
    c1, c2 = weighted_pure_concurrences(e)
    return c1 + c2


def coa_estimate(e: Rank2Ensemble, samples: int, rng_seed: int) -> float:
    """Sampled estimate of the concurrence of assistance.

    Maximizes the decomposition-averaged pure concurrence over ``samples``
    Haar-drawn 2x2 remixings of the ensemble; the input decomposition itself
    is always in the search set, so the estimate is monotone nondecreasing in
    ``samples`` for a fixed seed.
    """
    from . import decompositions

    if samples < 0:
        raise ValueError("samples must be nonnegative")
    rng = np.random.default_rng(rng_seed)
    best = ensemble_average_concurrence(e)
    for _ in range(samples):
        sample = decompositions.sample_decomposition(e, rng)
        best = max(best, sample.avg_pure_concurrence)
    return best
