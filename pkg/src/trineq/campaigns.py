"""Monte Carlo verification campaigns behind the verify-* CLI commands.

The campaigns are vectorized over fixed-size chunks for throughput; the
object-level API they certify is cross-checked against these batch paths in
the test suite, and the Wootters-equivalence campaign deliberately runs the
per-object route since comparing two independent routes is its whole point.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import concurrence, decompositions, linalg, sampling
from .states import SIGMA_Y2, BipartiteShape, density_from_ensemble
from .tolerances import EQUIV_ATOL, INEQ_SLACK, LEMMA_SLACK

CHUNK = 4096
MAX_DETAILS = 20
CROSS_CHECK_SAMPLES = 1000


@dataclass
class Violation:
    context: str
    inputs: dict
    margins: dict

    def as_dict(self) -> dict:
        return {"context": self.context, "inputs": self.inputs, "margins": self.margins}


@dataclass
class CampaignResult:
    name: str
    samples: int
    violations: int
    worst: dict
    details: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.violations == 0

    def as_dict(self) -> dict:
        return {
            "campaign": self.name,
            "samples": self.samples,
            "violations": self.violations,
            "worst": self.worst,
            "details": [v.as_dict() for v in self.details],
        }


def _complex_list(z) -> list:
    z = np.atleast_1d(np.asarray(z, dtype=np.complex128)).reshape(-1)
    return [[float(w.real), float(w.imag)] for w in z]


def _sym2_batch(x11, x12, x22):
    """Vectorized singular values of [[x11, x12], [x12, x22]] stacks."""
    g11 = np.abs(x11) ** 2 + np.abs(x12) ** 2
    g22 = np.abs(x12) ** 2 + np.abs(x22) ** 2
    g12 = np.conj(x11) * x12 + np.conj(x12) * x22
    disc = np.sqrt((g11 - g22) ** 2 + 4.0 * np.abs(g12) ** 2)
    s1 = np.sqrt(np.maximum(0.5 * (g11 + g22 + disc), 0.0))
    det = np.abs(x11 * x22 - x12 * x12)
    s2 = np.divide(det, s1, out=np.zeros_like(s1), where=s1 > 0.0)
    return s1, np.minimum(s2, s1)


def _minor_index_pairs(d: int):
    pairs = [(i, j) for i in range(d) for j in range(i + 1, d)]
    return np.array([p[0] for p in pairs]), np.array([p[1] for p in pairs])


def _concurrence_batch(vectors: np.ndarray, d1: int, d2: int) -> np.ndarray:
    """Concurrence of (sub)normalized vectors over the last axis.

    For a subnormalized vector sqrt(p) psi this returns p * C(psi) directly,
    because the minor sum is quadratic in the amplitudes.
    """
    a = vectors.reshape(vectors.shape[:-1] + (d1, d2))
    i, j = _minor_index_pairs(d1)
    k, l = _minor_index_pairs(d2)
    minors = (
        a[..., i[:, None], k[None, :]] * a[..., j[:, None], l[None, :]]
        - a[..., i[:, None], l[None, :]] * a[..., j[:, None], k[None, :]]
    )
    return 2.0 * np.sqrt(np.sum(np.abs(minors) ** 2, axis=(-2, -1)))


def _l1_pure_batch(vectors: np.ndarray) -> np.ndarray:
    """l1 coherence of projectors of (sub)normalized vectors over the last axis."""
    mags = np.abs(vectors)
    return np.sum(mags, axis=-1) ** 2 - np.sum(mags**2, axis=-1)


def _l1_matrix_batch(matrices: np.ndarray) -> np.ndarray:
    mags = np.abs(matrices)
    return np.sum(mags, axis=(-2, -1)) - np.trace(mags, axis1=-2, axis2=-1)


def _chunks(total: int):
    done = 0
    while done < total:
        yield min(CHUNK, total - done)
        done += CHUNK


def _highdim_bound_batch(sub: np.ndarray, d1: int, d2: int) -> np.ndarray:
    """Generator-pair lower bound for a batch of subnormalized pairs (n, 2, dim)."""
    n = sub.shape[0]
    a = sub.reshape(n, 2, d1, d2)
    mi, mj = _minor_index_pairs(d1)
    nk, nl = _minor_index_pairs(d2)
    total = np.zeros(n)
    for m in range(len(mi)):
        for k in range(len(nk)):
            i, j, kk, ll = mi[m], mj[m], nk[k], nl[k]
            raw = (
                a[:, :, None, i, kk] * a[:, None, :, j, ll]
                - a[:, :, None, i, ll] * a[:, None, :, j, kk]
                - a[:, :, None, j, kk] * a[:, None, :, i, ll]
                + a[:, :, None, j, ll] * a[:, None, :, i, kk]
            ).conj()
            s1, s2 = _sym2_batch(raw[:, 0, 0], raw[:, 0, 1], raw[:, 1, 1])
            total += (s1 - s2) ** 2
    return np.sqrt(total)


# ---------------------------------------------------------------------------
# campaigns
# ---------------------------------------------------------------------------


def lemma1_campaign(samples: int, seed: int) -> CampaignResult:
    """Random 2x2 complex symmetric matrices: | |x1|-|x2| | <= s1 - s2.

    Entries are uniform on the unit disc.  The first CROSS_CHECK_SAMPLES
    matrices are also pushed through the generic Jacobi singular-value route
    as an independent path; a disagreement counts as a violation.
    """
    rng = np.random.default_rng(seed)
    violations = 0
    worst_margin = np.inf
    worst_cross = 0.0
    details: list[Violation] = []
    checked = 0
    for n in _chunks(samples):
        z = sampling.unit_disc(rng, (3, n))
        x11, x12, x22 = z[0], z[1], z[2]
        s1, s2 = _sym2_batch(x11, x12, x22)
        gap = np.abs(np.abs(x11) - np.abs(x22))
        margin = (s1 - s2) - gap
        worst_margin = min(worst_margin, float(margin.min()))
        bad = margin < -LEMMA_SLACK
        violations += int(bad.sum())
        for idx in np.flatnonzero(bad)[: MAX_DETAILS - len(details)]:
            details.append(
                Violation(
                    context="lemma-2x2-gap",
                    inputs={"entries": _complex_list([x11[idx], x12[idx], x22[idx]])},
                    margins={"gap_margin": float(margin[idx])},
                )
            )
        if checked < CROSS_CHECK_SAMPLES:
            take = min(n, CROSS_CHECK_SAMPLES - checked)
            for idx in range(take):
                t = np.array([[x11[idx], x12[idx]], [x12[idx], x22[idx]]])
                ref = linalg.singular_values(t)
                dev = max(abs(ref[0] - s1[idx]), abs(ref[1] - s2[idx]))
                worst_cross = max(worst_cross, float(dev))
                if dev > EQUIV_ATOL:
                    violations += 1
                    if len(details) < MAX_DETAILS:
                        details.append(
                            Violation(
                                context="lemma-route-crosscheck",
                                inputs={"entries": _complex_list([x11[idx], x12[idx], x22[idx]])},
                                margins={"route_deviation": float(dev)},
                            )
                        )
            checked += take
    return CampaignResult(
        "lemma1",
        samples,
        violations,
        {"min_gap_margin": worst_margin, "max_route_deviation": worst_cross},
        details,
    )


def wootters_equivalence_campaign(samples: int, seed: int) -> CampaignResult:
    """Tau-route rank-2 concurrence against the Wootters route, per object."""
    rng = np.random.default_rng(seed)
    shape = BipartiteShape(2, 2)
    violations = 0
    worst = 0.0
    details: list[Violation] = []
    for _ in range(samples):
        e = sampling.random_rank2_ensemble(shape, rng)
        c_tau = concurrence.rank2_concurrence_2qubit(e)
        c_woo = concurrence.wootters_concurrence(density_from_ensemble(e))
        dev = abs(c_tau - c_woo)
        worst = max(worst, dev)
        if dev > EQUIV_ATOL:
            violations += 1
            if len(details) < MAX_DETAILS:
                details.append(
                    Violation(
                        context="wootters-equivalence",
                        inputs={
                            "p1": e.p1,
                            "psi1": _complex_list(e.psi1.amplitudes),
                            "psi2": _complex_list(e.psi2.amplitudes),
                        },
                        margins={"route_deviation": dev, "tau": c_tau, "wootters": c_woo},
                    )
                )
    return CampaignResult("wootters-equivalence", samples, violations, {"max_route_deviation": worst}, details)


def _record_triangle_violations(details, context, p1, vecs, lower, middle, upper, bad):
    for idx in np.flatnonzero(bad)[: MAX_DETAILS - len(details)]:
        details.append(
            Violation(
                context=context,
                inputs={
                    "p1": float(p1[idx]),
                    "psi1": _complex_list(vecs[idx, 0]),
                    "psi2": _complex_list(vecs[idx, 1]),
                },
                margins={
                    "lower_margin": float(middle[idx] - lower[idx]),
                    "upper_margin": float(upper[idx] - middle[idx]),
                },
            )
        )


def triangle_concurrence_campaign(
    d1: int, d2: int, samples: int, seed: int, remixes: int = 100
) -> CampaignResult:
    """Triangle inequality for random rank-2 ensembles of shape d1 x d2.

    For 2x2 shapes the middle quantity is the exact rank-2 concurrence; for
    larger shapes it is the generator-pair lower bound, and the upper link is
    checked against the minimum decomposition average over ``remixes``
    Haar remixings of each ensemble.
    """
    shape = BipartiteShape(d1, d2)
    two_qubit = shape.is_two_qubit
    rng = np.random.default_rng(seed)
    dim = shape.dim
    violations = 0
    worst_lower = np.inf
    worst_upper = np.inf
    details: list[Violation] = []
    name = f"triangle-concurrence-{d1}x{d2}"
    for n in _chunks(samples):
        p1, vecs = sampling.random_mixture_batch(rng, n, dim)
        weights = np.stack([p1, 1.0 - p1], axis=1)
        sub = np.sqrt(weights)[:, :, None] * vecs
        c_members = _concurrence_batch(sub, d1, d2)  # (n, 2), already weighted
        lower = np.abs(c_members[:, 0] - c_members[:, 1])
        upper = c_members[:, 0] + c_members[:, 1]
        if two_qubit:
            tau = np.einsum("nad,de,nbe->nab", sub.conj(), SIGMA_Y2, sub.conj())
            s1, s2 = _sym2_batch(tau[:, 0, 0], tau[:, 0, 1], tau[:, 1, 1])
            middle = s1 - s2
        else:
            middle = _highdim_bound_batch(sub, d1, d2)
            theta, gamma, phi = decompositions.haar_batch(rng, n * remixes)
            u = decompositions.mixing_matrices(theta, gamma, phi).reshape(n, remixes, 2, 2)
            remixed = np.einsum("nrab,nbd->nrad", u, sub)
            avg = np.sum(_concurrence_batch(remixed, d1, d2), axis=2)  # (n, remixes)
            upper = np.minimum(upper, avg.min(axis=1))
        lower_margin = middle - lower
        upper_margin = upper - middle
        worst_lower = min(worst_lower, float(lower_margin.min()))
        worst_upper = min(worst_upper, float(upper_margin.min()))
        bad = (lower_margin < -INEQ_SLACK) | (upper_margin < -INEQ_SLACK)
        violations += int(bad.sum())
        _record_triangle_violations(details, name, p1, vecs, lower, middle, upper, bad)
    return CampaignResult(
        name,
        samples,
        violations,
        {"min_lower_margin": worst_lower, "min_upper_margin": worst_upper},
        details,
    )


def triangle_l1_campaign(dim: int, samples: int, seed: int) -> CampaignResult:
    """l1 triangle inequality over random density-matrix pairs of one dimension."""
    rng = np.random.default_rng(seed)
    violations = 0
    worst_lower = np.inf
    worst_upper = np.inf
    details: list[Violation] = []
    name = f"triangle-l1-dim{dim}"
    for n in _chunks(samples):
        rho1 = sampling.random_density_batch(rng, n, dim)
        rho2 = sampling.random_density_batch(rng, n, dim)
        p1 = sampling.random_mixture_weights(rng, n)
        c1 = p1 * _l1_matrix_batch(rho1)
        c2 = (1.0 - p1) * _l1_matrix_batch(rho2)
        mix = p1[:, None, None] * rho1 + (1.0 - p1)[:, None, None] * rho2
        middle = _l1_matrix_batch(mix)
        lower, upper = np.abs(c1 - c2), c1 + c2
        lower_margin = middle - lower
        upper_margin = upper - middle
        worst_lower = min(worst_lower, float(lower_margin.min()))
        worst_upper = min(worst_upper, float(upper_margin.min()))
        bad = (lower_margin < -INEQ_SLACK) | (upper_margin < -INEQ_SLACK)
        violations += int(bad.sum())
        for idx in np.flatnonzero(bad)[: MAX_DETAILS - len(details)]:
            details.append(
                Violation(
                    context=name,
                    inputs={"p1": float(p1[idx]), "rho1": _complex_list(rho1[idx]), "rho2": _complex_list(rho2[idx])},
                    margins={
                        "lower_margin": float(lower_margin[idx]),
                        "upper_margin": float(upper_margin[idx]),
                    },
                )
            )
    return CampaignResult(
        name,
        samples,
        violations,
        {"min_lower_margin": worst_lower, "min_upper_margin": worst_upper},
        details,
    )


def roof_l1_campaign(dim: int, samples: int, seed: int, remixes: int = 16) -> CampaignResult:
    """Convex-roof sandwich for the l1 norm on random rank-2 mixtures.

    Checks the chain lower <= C_l1(rho) <= estimate <= upper, where the
    estimate is the minimum decomposition average over the input
    decomposition plus ``remixes`` Haar remixings.
    """
    rng = np.random.default_rng(seed)
    violations = 0
    worst = {"min_lower_margin": np.inf, "min_sandwich_margin": np.inf, "min_upper_margin": np.inf}
    details: list[Violation] = []
    name = f"roof-l1-dim{dim}"
    for n in _chunks(samples):
        p1, vecs = sampling.random_mixture_batch(rng, n, dim)
        weights = np.stack([p1, 1.0 - p1], axis=1)
        sub = np.sqrt(weights)[:, :, None] * vecs
        member_l1 = _l1_pure_batch(sub)  # (n, 2), weighted
        lower = np.abs(member_l1[:, 0] - member_l1[:, 1])
        upper = member_l1.sum(axis=1)
        theta, gamma, phi = decompositions.haar_batch(rng, n * remixes)
        u = decompositions.mixing_matrices(theta, gamma, phi).reshape(n, remixes, 2, 2)
        remixed = np.einsum("nrab,nbd->nrad", u, sub)
        avg = np.sum(_l1_pure_batch(remixed), axis=2)
        estimate = np.minimum(upper, avg.min(axis=1))
        rho = np.einsum("na,nad,nae->nde", weights, vecs, vecs.conj())
        rho_l1 = _l1_matrix_batch(rho)
        lower_margin = rho_l1 - lower
        sandwich_margin = estimate - rho_l1
        upper_margin = upper - estimate
        worst["min_lower_margin"] = min(worst["min_lower_margin"], float(lower_margin.min()))
        worst["min_sandwich_margin"] = min(
            worst["min_sandwich_margin"], float(sandwich_margin.min())
        )
        worst["min_upper_margin"] = min(worst["min_upper_margin"], float(upper_margin.min()))
        bad = (
            (lower_margin < -INEQ_SLACK)
            | (sandwich_margin < -INEQ_SLACK)
            | (upper_margin < -INEQ_SLACK)
        )
        violations += int(bad.sum())
        for idx in np.flatnonzero(bad)[: MAX_DETAILS - len(details)]:
            details.append(
                Violation(
                    context=name,
                    inputs={
                        "p1": float(p1[idx]),
                        "v1": _complex_list(vecs[idx, 0]),
                        "v2": _complex_list(vecs[idx, 1]),
                    },
                    margins={
                        "lower_margin": float(lower_margin[idx]),
                        "sandwich_margin": float(sandwich_margin[idx]),
                        "upper_margin": float(upper_margin[idx]),
                    },
                )
            )
    return CampaignResult(name, samples, violations, worst, details)


# ---------------------------------------------------------------------------
# figure sweep
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FigureRow:
    p: float
    c_rho: float
    sample_id: int
    theta: float
    gamma: float
    phi: float
    sum_c: float
    diff_c: float
    violates_upper: bool
    violates_lower: bool


@dataclass(frozen=True)
class FigureSummary:
    p: float
    c_rho: float
    min_sum: float
    max_sum: float
    min_diff: float
    max_diff: float
    coa_estimate: float


@dataclass
class FigureData:
    rows: list[FigureRow]
    summaries: list[FigureSummary]
    violations: int


def figure_sweep(grid_points: int, decomps_per_p: int, seed: int) -> FigureData:
    """Sweep the worked example over P and scatter decomposition statistics.

    The grid spans [0.01, 0.99]; the pure endpoints P=0 and P=1 are appended
    to the summaries analytically (for a pure state every decomposition
    statistic collapses to the state's own concurrence).
    """
    psi1, psi2 = decompositions.figure_states()
    c_pure_1 = concurrence.pure_concurrence(psi1)
    c_pure_2 = concurrence.pure_concurrence(psi2)
    grid = np.linspace(0.01, 0.99, grid_points)
    points = decompositions.sweep_example(grid, decomps_per_p, seed)
    rows: list[FigureRow] = []
    summaries: list[FigureSummary] = [
        FigureSummary(0.0, c_pure_2, c_pure_2, c_pure_2, c_pure_2, c_pure_2, c_pure_2)
    ]
    violations = 0
    for point in points:
        sums, diffs = [], []
        for k, sample in enumerate(point.samples):
            c1, c2 = concurrence.weighted_pure_concurrences(sample.ensemble)
            sum_c, diff_c = c1 + c2, abs(c1 - c2)
            v_up = sum_c < point.c_rho - INEQ_SLACK
            v_lo = diff_c > point.c_rho + INEQ_SLACK
            violations += int(v_up) + int(v_lo)
            sums.append(sum_c)
            diffs.append(diff_c)
            u = sample.unitary
            rows.append(
                FigureRow(
                    point.p, point.c_rho, k, u.theta, u.gamma, u.phi, sum_c, diff_c, v_up, v_lo
                )
            )
        summaries.append(
            FigureSummary(
                point.p,
                point.c_rho,
                min(sums),
                max(sums),
                min(diffs),
                max(diffs),
                max(sums),
            )
        )
    summaries.append(
        FigureSummary(1.0, c_pure_1, c_pure_1, c_pure_1, c_pure_1, c_pure_1, c_pure_1)
    )
    return FigureData(rows, summaries, violations)
