"""l1-norm coherence, its convex-roof variant, and their triangle inequalities.

Coherence is a single-system notion measured in the computational basis of
whatever space the state lives in, so the functions here accept plain numpy
vectors/matrices of any dimension >= 2 as well as the bipartite state types
(whose flattened d1*d2 space is then the reference basis).  Scaling follows
the l1 norm itself: C_l1(p * rho) = p * C_l1(rho), and a weighted pure state
means the matrix weight * |psi><psi|.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import InvalidState, NotUnitary, ShapeMismatch
from .report import InequalityReport
from .states import DensityMatrix, PureState, Rank2Ensemble
from .tolerances import BASIS_UNITARY_ATOL, INDEPENDENCE_MIN_GRAM, INEQ_SLACK, NORM_ATOL


@dataclass(frozen=True)
class CoherenceBasis:
    """Reference basis marker: the computational basis of a d-dim space."""

    dimension: int

    def __post_init__(self):
        if self.dimension < 2:
            raise InvalidState(f"basis dimension must be >= 2, got {self.dimension}")


def _as_matrix(state) -> np.ndarray:
    """Coerce a state-like object to a density-like matrix."""
    if isinstance(state, DensityMatrix):
        return state.matrix
    if isinstance(state, PureState):
        return state.density()
    a = np.asarray(state, dtype=np.complex128)
    if a.ndim == 1:
        return np.outer(a, a.conj())
    if a.ndim == 2 and a.shape[0] == a.shape[1]:
        return a
    raise ShapeMismatch(f"cannot interpret array of shape {a.shape} as a state")


def l1_coherence(state, basis: CoherenceBasis | None = None) -> float:
    """Sum of the absolute values of all off-diagonal matrix elements."""
    m = _as_matrix(state)
    if basis is not None and basis.dimension != m.shape[0]:
        raise ShapeMismatch(
            f"state dimension {m.shape[0]} does not match basis dimension {basis.dimension}"
        )
    mags = np.abs(m)
    return float(np.sum(mags) - np.sum(np.diagonal(mags)))


def _pure_l1(v: np.ndarray) -> float:
    # l1 coherence of |v><v| for a (sub)normalized vector: (sum |v_i|)^2 - ||v||^2
    mags = np.abs(v)
    return float(np.sum(mags) ** 2 - np.sum(mags**2))


def triangle_check_l1(rho1, rho2, p1: float) -> InequalityReport:
    """Check |C(p1 rho1) - C(p2 rho2)| <= C(p1 rho1 + p2 rho2) <= sum.

    Either argument may be a DensityMatrix, a PureState, a bare vector or a
    bare square matrix; mixed and pure components are both fine.
    """
    if not 0.0 < p1 < 1.0:
        raise InvalidState(f"p1 must lie in (0, 1), got {p1!r}")
    m1, m2 = _as_matrix(rho1), _as_matrix(rho2)
    if m1.shape != m2.shape:
        raise ShapeMismatch(f"components differ in dimension: {m1.shape} vs {m2.shape}")
    p2 = 1.0 - p1
    c1 = p1 * l1_coherence(m1)
    c2 = p2 * l1_coherence(m2)
    middle = l1_coherence(p1 * m1 + p2 * m2)
    context = f"triangle-l1 dim={m1.shape[0]} p1={p1:.12g}"
    return InequalityReport.from_bounds(abs(c1 - c2), middle, c1 + c2, context=context)


def _as_mixture(e) -> tuple[float, np.ndarray, np.ndarray]:
    """Coerce to (p1, v1, v2) with normalized, linearly independent vectors."""
    if isinstance(e, Rank2Ensemble):
        return e.p1, e.psi1.amplitudes, e.psi2.amplitudes
    p1, v1, v2 = e
    v1 = np.asarray(v1, dtype=np.complex128).reshape(-1)
    v2 = np.asarray(v2, dtype=np.complex128).reshape(-1)
    if v1.shape != v2.shape:
        raise ShapeMismatch(f"mixture components differ in dimension: {v1.size} vs {v2.size}")
    if not 0.0 < p1 < 1.0:
        raise InvalidState(f"p1 must lie in (0, 1), got {p1!r}")
    for name, v in (("v1", v1), ("v2", v2)):
        if abs(np.linalg.norm(v) - 1.0) > NORM_ATOL:
            raise InvalidState(f"{name} is not normalized")
    gram = 1.0 - abs(np.vdot(v1, v2)) ** 2
    if gram <= INDEPENDENCE_MIN_GRAM:
        raise InvalidState(f"mixture components are (numerically) linearly dependent: {gram:.3e}")
    return float(p1), v1, v2


def convex_roof_l1_estimate(e, samples: int, rng_seed: int) -> float:
    """Upper estimate of the convex-roof l1 coherence of a rank-2 mixture.

    Minimizes the decomposition-averaged pure-state l1 coherence over
    ``samples`` Haar-drawn 2x2 remixings; the input decomposition is always
    in the search set, so with samples=0 this returns exactly its average and
    the estimate is monotone nonincreasing in ``samples`` for a fixed seed.
    ``e`` is a Rank2Ensemble or a (p1, v1, v2) triple of any dimension >= 2.
    """
    from . import decompositions

    if samples < 0:
        raise ValueError("samples must be nonnegative")
    p1, v1, v2 = _as_mixture(e)
    sub = np.vstack([np.sqrt(p1) * v1, np.sqrt(1.0 - p1) * v2])
    best = _pure_l1(sub[0]) + _pure_l1(sub[1])
    rng = np.random.default_rng(rng_seed)
    for _ in range(samples):
        u = decompositions.haar_sample(rng)
        new = u.matrix() @ sub
        best = min(best, _pure_l1(new[0]) + _pure_l1(new[1]))
    return best


def triangle_check_convex_roof_l1(e, samples: int, rng_seed: int) -> InequalityReport:
    """Check the full rank-2 convex-roof chain for the l1 norm.

    With lower = |C(Psi1) - C(Psi2)| and upper = C(Psi1) + C(Psi2) for the
    subnormalized members, the roof estimate (reported as ``middle``) must
    satisfy lower <= C_l1(rho) <= estimate <= upper; all three links enter
    ``passed``, and C_l1(rho) is recorded in the context.
    """
    p1, v1, v2 = _as_mixture(e)
    p2 = 1.0 - p1
    c1 = p1 * _pure_l1(v1)
    c2 = p2 * _pure_l1(v2)
    lower, upper = abs(c1 - c2), c1 + c2
    estimate = convex_roof_l1_estimate((p1, v1, v2), samples, rng_seed)
    rho = p1 * np.outer(v1, v1.conj()) + p2 * np.outer(v2, v2.conj())
    rho_l1 = l1_coherence(rho)
    chain_ok = (lower <= rho_l1 + INEQ_SLACK) and (rho_l1 <= estimate + INEQ_SLACK)
    context = (
        f"triangle-roof-l1 dim={v1.size} p1={p1:.12g} samples={samples} l1(rho)={rho_l1:.12g}"
    )
    return InequalityReport.from_bounds(
        lower, estimate, upper, context=context, extra_ok=chain_ok
    )


def load_basis_change(path) -> np.ndarray:
    """Read a JSON basis-change matrix [[ [re, im], ... ], ...] and validate unitarity."""
    import json

    with open(path, encoding="utf-8") as fh:
        raw = json.load(fh)
    try:
        u = np.array([[complex(re, im) for re, im in row] for row in raw], dtype=np.complex128)
    except (TypeError, ValueError) as exc:
        raise NotUnitary(f"{path}: expected a matrix of [re, im] pairs: {exc}") from exc
    return validated_unitary(u, name=str(path))


def validated_unitary(u: np.ndarray, name: str = "matrix") -> np.ndarray:
    u = linalg.as_complex_matrix(u)
    if u.shape[0] != u.shape[1]:
        raise NotUnitary(f"{name}: not square: {u.shape}")
    dev = float(np.max(np.abs(u.conj().T @ u - np.eye(u.shape[0]))))
    if dev > BASIS_UNITARY_ATOL:
        raise NotUnitary(f"{name}: max |U†U - I| = {dev:.3e} exceeds {BASIS_UNITARY_ATOL:.1e}")
    return u


def apply_basis_change(state, u: np.ndarray) -> np.ndarray:
    """Express a state in the basis {U |i>}: returns U† rho U as a matrix."""
    m = _as_matrix(state)
    if u.shape[0] != m.shape[0]:
        raise ShapeMismatch(
            f"basis-change dimension {u.shape[0]} does not match state dimension {m.shape[0]}"
        )
    return u.conj().T @ m @ u
