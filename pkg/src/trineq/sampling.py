"""Seeded random generators for states, matrices and ensembles.

Everything takes an explicit numpy Generator so campaigns are reproducible;
batch variants consume the stream in fixed-size blocks.
"""

from __future__ import annotations

import numpy as np

from .states import BipartiteShape, PureState, Rank2Ensemble
from .tolerances import INDEPENDENCE_MIN_GRAM


def unit_disc(rng: np.random.Generator, size) -> np.ndarray:
    """Complex samples uniform on the closed unit disc."""
    r = np.sqrt(rng.random(size))
    ang = rng.uniform(0.0, 2.0 * np.pi, size)
    return r * np.exp(1j * ang)


def random_vectors(rng: np.random.Generator, n: int, dim: int) -> np.ndarray:
    """n Haar-random normalized vectors as rows of an (n, dim) array."""
    z = rng.standard_normal((n, dim)) + 1j * rng.standard_normal((n, dim))
    return z / np.linalg.norm(z, axis=1, keepdims=True)


def random_pure_state(shape: BipartiteShape, rng: np.random.Generator) -> PureState:
    return PureState(shape, random_vectors(rng, 1, shape.dim)[0])


def random_density(rng: np.random.Generator, dim: int) -> np.ndarray:
    """One Hilbert-Schmidt random density matrix as a plain array."""
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    m = g @ g.conj().T
    return m / np.real(np.trace(m))


def random_density_batch(rng: np.random.Generator, n: int, dim: int) -> np.ndarray:
    g = rng.standard_normal((n, dim, dim)) + 1j * rng.standard_normal((n, dim, dim))
    m = g @ np.conj(np.transpose(g, (0, 2, 1)))
    tr = np.real(np.trace(m, axis1=1, axis2=2))
    return m / tr[:, None, None]


def random_mixture_weights(rng: np.random.Generator, n: int) -> np.ndarray:
    """Mixing weights p1 uniform on (0, 1), re-drawn if exactly degenerate."""
    p = rng.random(n)
    bad = (p <= 0.0) | (p >= 1.0)
    while np.any(bad):
        p[bad] = rng.random(int(bad.sum()))
        bad = (p <= 0.0) | (p >= 1.0)
    return p


def random_rank2_ensemble(shape: BipartiteShape, rng: np.random.Generator) -> Rank2Ensemble:
    """One random rank-2 ensemble: Haar member states, uniform weight."""
    while True:
        v = random_vectors(rng, 2, shape.dim)
        gram = 1.0 - abs(np.vdot(v[0], v[1])) ** 2
        if gram <= INDEPENDENCE_MIN_GRAM:
            continue
        p1 = float(random_mixture_weights(rng, 1)[0])
        return Rank2Ensemble.of(p1, PureState(shape, v[0]), PureState(shape, v[1]))


def random_mixture_batch(
    rng: np.random.Generator, n: int, dim: int
) -> tuple[np.ndarray, np.ndarray]:
    """Batch of rank-2 mixtures: weights (n,) and member vectors (n, 2, dim).

    Pairs that fail the linear-independence floor are re-drawn (measure-zero
    for Haar samples, so this virtually never loops).
    """
    vecs = random_vectors(rng, 2 * n, dim).reshape(n, 2, dim)
    gram = 1.0 - np.abs(np.einsum("nd,nd->n", vecs[:, 0].conj(), vecs[:, 1])) ** 2
    bad = gram <= INDEPENDENCE_MIN_GRAM
    while np.any(bad):
        k = int(bad.sum())
        vecs[bad] = random_vectors(rng, 2 * k, dim).reshape(k, 2, dim)
        gram[bad] = (
            1.0
            - np.abs(np.einsum("nd,nd->n", vecs[bad, 0].conj(), vecs[bad, 1])) ** 2
        )
        bad = gram <= INDEPENDENCE_MIN_GRAM
    p1 = random_mixture_weights(rng, n)
    return p1, vecs
