"""Alternative pure-state decompositions of a rank-2 mixture.

All same-size decompositions of a rank-2 state arise from mixing the two
subnormalized vectors with a 2x2 unitary.  This module parameterizes that
unitary, samples it Haar-uniformly, and drives the sweep that produces the
figure data for the worked two-qubit example.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import coherence, concurrence
from .errors import DegenerateDecomposition, InvalidEnsemble, ShapeMismatch
from .states import BipartiteShape, PureState, Rank2Ensemble, density_from_ensemble
from .tolerances import DEGENERATE_WEIGHT_MIN, MIXING_UNITARY_ATOL, REMIX_MAX_RETRIES


@dataclass(frozen=True)
class MixingUnitary:
    """2x2 unitary [[cos(t) e^{ig}, sin(t) e^{if}], [-sin(t) e^{-if}, cos(t) e^{-ig}]].

    A global phase is omitted; it cannot affect any measured quantity.
    """

    theta: float
    gamma: float
    phi: float

    def __post_init__(self):
        if not 0.0 <= self.theta <= math.pi / 2:
            raise InvalidEnsemble(f"theta must lie in [0, pi/2], got {self.theta!r}")
        for name, val in (("gamma", self.gamma), ("phi", self.phi)):
            if not 0.0 <= val < 2.0 * math.pi:
                raise InvalidEnsemble(f"{name} must lie in [0, 2*pi), got {val!r}")

    def matrix(self) -> np.ndarray:
        c, s = math.cos(self.theta), math.sin(self.theta)
        eg = complex(math.cos(self.gamma), math.sin(self.gamma))
        ef = complex(math.cos(self.phi), math.sin(self.phi))
        u = np.array(
            [[c * eg, s * ef], [-s * ef.conjugate(), c * eg.conjugate()]],
            dtype=np.complex128,
        )
        assert np.max(np.abs(u.conj().T @ u - np.eye(2))) <= MIXING_UNITARY_ATOL
        return u


IDENTITY_MIXING = MixingUnitary(0.0, 0.0, 0.0)


def haar_sample(rng: np.random.Generator) -> MixingUnitary:
    """Draw a mixing unitary Haar-uniformly.

    theta = arcsin(sqrt(u)) with u uniform on [0, 1) makes cos^2(theta)
    uniform (the Haar weight on the coset), and the two phases are uniform.
    Draw order (theta, gamma, phi) is part of the seeded-stream contract.
    """
    theta = math.asin(math.sqrt(rng.random()))
    gamma = rng.uniform(0.0, 2.0 * math.pi)
    phi = rng.uniform(0.0, 2.0 * math.pi)
    return MixingUnitary(theta, gamma, phi)


def haar_batch(rng: np.random.Generator, n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Vectorized haar_sample: arrays (theta, gamma, phi) of length n.

    Consumes the stream in blocks (all thetas, all gammas, all phis), so it
    is deterministic for a fixed seed but not draw-for-draw interleavable
    with haar_sample.
    """
    theta = np.arcsin(np.sqrt(rng.random(n)))
    gamma = rng.uniform(0.0, 2.0 * math.pi, n)
    phi = rng.uniform(0.0, 2.0 * math.pi, n)
    return theta, gamma, phi


def mixing_matrices(theta: np.ndarray, gamma: np.ndarray, phi: np.ndarray) -> np.ndarray:
    """Stack of 2x2 mixing unitaries from parameter arrays, shape (n, 2, 2)."""
    c, s = np.cos(theta), np.sin(theta)
    eg = np.exp(1j * gamma)
    ef = np.exp(1j * phi)
    u = np.empty((len(theta), 2, 2), dtype=np.complex128)
    u[:, 0, 0] = c * eg
    u[:, 0, 1] = s * ef
    u[:, 1, 0] = -s * ef.conj()
    u[:, 1, 1] = c * eg.conj()
    return u


def remix_vectors(weights, vectors, u_matrix) -> tuple[np.ndarray, np.ndarray]:
    """Mix subnormalized vectors sqrt(w_a) v_a with a 2x2 unitary.

    Returns (new weights, new normalized vectors as rows).  Raises
    DegenerateDecomposition when a new weight falls below the rejection
    threshold.
    """
    weights = np.asarray(weights, dtype=np.float64)
    vectors = np.asarray(vectors, dtype=np.complex128)
    sub = np.sqrt(weights)[:, None] * vectors
    new_sub = np.asarray(u_matrix, dtype=np.complex128) @ sub
    new_w = np.real(np.sum(new_sub * new_sub.conj(), axis=1))
    if new_w.min() < DEGENERATE_WEIGHT_MIN:
        raise DegenerateDecomposition(
            f"remixed weight {new_w.min():.3e} below {DEGENERATE_WEIGHT_MIN:.1e}"
        )
    new_w = new_w / new_w.sum()
    return new_w, new_sub / np.sqrt(new_w)[:, None]


def remix(e: Rank2Ensemble, u: MixingUnitary) -> Rank2Ensemble:
    """Re-mix an ensemble; the density matrix is invariant by construction."""
    w, vecs = remix_vectors((e.p1, e.p2), (e.psi1.amplitudes, e.psi2.amplitudes), u.matrix())
    try:
        return Rank2Ensemble(
            float(w[0]),
            float(w[1]),
            PureState.normalized(e.shape, vecs[0]),
            PureState.normalized(e.shape, vecs[1]),
        )
    except (InvalidEnsemble, ShapeMismatch) as exc:
        # a numerically near-parallel pair only occurs next to weight underflow
        raise DegenerateDecomposition(str(exc)) from exc


@dataclass(frozen=True)
class DecompositionSample:
    """One alternative decomposition with its averaged pure-state measures."""

    unitary: MixingUnitary
    ensemble: Rank2Ensemble
    avg_pure_concurrence: float
    avg_pure_l1: float


def _sample_from(e: Rank2Ensemble, u: MixingUnitary) -> DecompositionSample:
    mixed = remix(e, u)
    avg_c = concurrence.ensemble_average_concurrence(mixed)
    avg_l1 = mixed.p1 * coherence.l1_coherence(mixed.psi1) + mixed.p2 * coherence.l1_coherence(
        mixed.psi2
    )
    return DecompositionSample(u, mixed, avg_c, avg_l1)


def sample_decomposition(
    e: Rank2Ensemble, rng: np.random.Generator, max_retries: int = REMIX_MAX_RETRIES
) -> DecompositionSample:
    """Draw one Haar-remixed decomposition, resampling degenerate draws."""
    for _ in range(max_retries):
        u = haar_sample(rng)
        try:
            return _sample_from(e, u)
        except DegenerateDecomposition:
            continue
    raise DegenerateDecomposition(f"no valid decomposition in {max_retries} draws")


# ---------------------------------------------------------------------------
# the worked two-qubit example and its P sweep
# ---------------------------------------------------------------------------


def figure_states() -> tuple[PureState, PureState]:
    """The fixed pair of entangled two-qubit states behind the figure sweep.

    psi1 = sqrt(3/8)(|00> + |11>) + i sqrt(1/8)(|01> + |10>)  (concurrence 1)
    psi2 = sqrt(3/8)(|00> + |11>) +   sqrt(1/8)(|01> + |10>)  (concurrence 1/2)
    """
    shape = BipartiteShape(2, 2)
    a, b = math.sqrt(3.0 / 8.0), math.sqrt(1.0 / 8.0)
    psi1 = PureState(shape, np.array([a, 1j * b, 1j * b, a]))
    psi2 = PureState(shape, np.array([a, b, b, a]))
    return psi1, psi2


def figure_ensemble(p: float) -> Rank2Ensemble:
    """The figure-sweep mixture P |psi1><psi1| + (1-P) |psi2><psi2|."""
    psi1, psi2 = figure_states()
    return Rank2Ensemble.of(p, psi1, psi2)


@dataclass(frozen=True)
class SweepPoint:
    """Per-P record of the figure sweep."""

    p: float
    c_rho: float
    samples: tuple[DecompositionSample, ...]


def sweep_example(p_grid, decomps_per_p: int, rng_seed: int) -> list[SweepPoint]:
    """Sweep the example mixture over a grid of P values in (0, 1).

    For each P the mixture concurrence is computed with the closed-form
    2-qubit route and ``decomps_per_p`` Haar decompositions are sampled; the
    sum and difference of their member concurrences scatter around it.
    """
    rng = np.random.default_rng(rng_seed)
    points = []
    for p in np.asarray(p_grid, dtype=np.float64):
        if not 0.0 < p < 1.0:
            raise InvalidEnsemble(f"grid values must lie strictly inside (0, 1), got {p!r}")
        e = figure_ensemble(float(p))
        c_rho = concurrence.wootters_concurrence(density_from_ensemble(e))
        samples = tuple(sample_decomposition(e, rng) for _ in range(decomps_per_p))
        points.append(SweepPoint(float(p), c_rho, samples))
    return points
