"""decompositions module: mixing unitaries, Haar sampling, and the P sweep."""

import math

import numpy as np
import pytest

from trineq import decompositions as dec
from trineq.errors import DegenerateDecomposition, InvalidEnsemble
from trineq.states import PureState, Rank2Ensemble, density_from_ensemble

from conftest import random_state_vector

# regression pin: first draw from a fresh seed-42 generator
GOLDEN_SEED42 = (1.0753313135613185, 2.757554564287996, 5.3947298351621535)


class TestMixingUnitary:
    def test_matrix_is_unitary_for_random_params(self, rng):
        for _ in range(200):
            u = dec.MixingUnitary(
                rng.uniform(0, math.pi / 2), rng.uniform(0, 2 * math.pi), rng.uniform(0, 2 * math.pi)
            )
            m = u.matrix()
            assert np.max(np.abs(m.conj().T @ m - np.eye(2))) < 1e-12

    def test_parameter_ranges_enforced(self):
        with pytest.raises(InvalidEnsemble):
            dec.MixingUnitary(-0.1, 0.0, 0.0)
        with pytest.raises(InvalidEnsemble):
            dec.MixingUnitary(0.1, 7.0, 0.0)

    def test_identity_element(self):
        assert np.allclose(dec.IDENTITY_MIXING.matrix(), np.eye(2))


class TestHaarSampling:
    def test_golden_first_draw_seed_42(self):
        u = dec.haar_sample(np.random.default_rng(42))
        assert (u.theta, u.gamma, u.phi) == pytest.approx(GOLDEN_SEED42, abs=0.0)

    def test_cos_sq_theta_is_uniform(self):
        rng = np.random.default_rng(7)
        theta, _, _ = dec.haar_batch(rng, 100000)
        x = np.sort(np.cos(theta) ** 2)
        # Kolmogorov-Smirnov distance to U[0, 1]
        n = len(x)
        grid = np.arange(1, n + 1) / n
        ks = max(np.max(np.abs(grid - x)), np.max(np.abs(x - (grid - 1.0 / n))))
        assert ks < 0.01

    def test_theta_density_follows_sin_2theta(self):
        rng = np.random.default_rng(8)
        theta, _, _ = dec.haar_batch(rng, 200000)
        edges = np.linspace(0.0, math.pi / 2, 21)
        counts, _ = np.histogram(theta, bins=edges)
        expected = len(theta) * 0.5 * (np.cos(2 * edges[:-1]) - np.cos(2 * edges[1:]))
        z = (counts - expected) / np.sqrt(expected)
        assert np.max(np.abs(z)) < 4.0

    def test_batch_matches_parameterization(self):
        rng = np.random.default_rng(11)
        theta, gamma, phi = dec.haar_batch(rng, 5)
        u = dec.mixing_matrices(theta, gamma, phi)
        for k in range(5):
            ref = dec.MixingUnitary(theta[k], gamma[k], phi[k]).matrix()
            assert np.max(np.abs(u[k] - ref)) < 1e-15


class TestRemix:
    def test_identity_returns_same_ensemble(self, example_half):
        mixed = dec.remix(example_half, dec.IDENTITY_MIXING)
        assert mixed.p1 == pytest.approx(example_half.p1, abs=1e-15)
        assert np.allclose(mixed.psi1.amplitudes, example_half.psi1.amplitudes)
        assert np.allclose(mixed.psi2.amplitudes, example_half.psi2.amplitudes)

    def test_quarter_turn_swaps_components(self):
        e = dec.figure_ensemble(0.3)
        mixed = dec.remix(e, dec.MixingUnitary(math.pi / 2, 0.0, 0.0))
        assert mixed.p1 == pytest.approx(e.p2, abs=1e-12)
        assert abs(np.vdot(mixed.psi1.amplitudes, e.psi2.amplitudes)) == pytest.approx(1.0, abs=1e-12)
        assert abs(np.vdot(mixed.psi2.amplitudes, e.psi1.amplitudes)) == pytest.approx(1.0, abs=1e-12)

    def test_bell_diagonal_remix_changes_average_not_density(self, bell_plus, bell_minus):
        from trineq.concurrence import ensemble_average_concurrence

        e = Rank2Ensemble.of(0.5, bell_plus, bell_minus)
        mixed = dec.remix(e, dec.MixingUnitary(math.pi / 4, 0.0, 0.0))
        assert ensemble_average_concurrence(mixed) != pytest.approx(
            ensemble_average_concurrence(e), abs=1e-3
        )
        assert np.max(
            np.abs(density_from_ensemble(mixed).matrix - density_from_ensemble(e).matrix)
        ) < 1e-12

    def test_density_invariance_over_random_remixes(self, rng, two_qubit):
        rng_u = np.random.default_rng(5)
        for _ in range(50):
            v1, v2 = random_state_vector(rng, 4), random_state_vector(rng, 4)
            if 1 - abs(np.vdot(v1, v2)) ** 2 < 1e-6:
                continue
            e = Rank2Ensemble.of(
                rng.uniform(0.05, 0.95), PureState(two_qubit, v1), PureState(two_qubit, v2)
            )
            rho = density_from_ensemble(e).matrix
            mixed = dec.remix(e, dec.haar_sample(rng_u))
            assert np.max(np.abs(density_from_ensemble(mixed).matrix - rho)) < 1e-9

    def test_degenerate_weight_raises(self, two_qubit):
        # p2 below the rejection floor survives ensemble construction but the
        # identity remix reproduces it and must flag the degenerate weight
        a = PureState(two_qubit, np.array([1.0, 0, 0, 0]))
        b = PureState(two_qubit, np.array([0, 1.0, 0, 0]))
        e = Rank2Ensemble.of(1.0 - 2e-11, a, b)
        with pytest.raises(DegenerateDecomposition):
            dec.remix(e, dec.IDENTITY_MIXING)

    def test_sample_decomposition_retries_until_valid(self, rng, example_half):
        sample = dec.sample_decomposition(example_half, np.random.default_rng(2))
        assert sample.avg_pure_concurrence >= 0.0
        assert sample.avg_pure_l1 >= 0.0


class TestSweep:
    def test_endpoint_limits(self):
        points = dec.sweep_example([1e-9, 1.0 - 1e-9], 1, 3)
        assert points[0].c_rho == pytest.approx(0.5, abs=1e-6)
        assert points[1].c_rho == pytest.approx(1.0, abs=1e-6)

    def test_grid_must_be_interior(self):
        with pytest.raises(InvalidEnsemble):
            dec.sweep_example([0.0, 0.5], 1, 3)

    def test_sweep_points_respect_both_bounds(self):
        from trineq.concurrence import weighted_pure_concurrences

        points = dec.sweep_example(np.linspace(0.05, 0.95, 7), 50, 9)
        for point in points:
            for sample in point.samples:
                c1, c2 = weighted_pure_concurrences(sample.ensemble)
                assert c1 + c2 >= point.c_rho - 1e-9
                assert abs(c1 - c2) <= point.c_rho + 1e-9

    def test_sample_count_honoured(self):
        points = dec.sweep_example([0.5], 17, 12)
        assert len(points[0].samples) == 17
