import numpy as np
import pytest

from trineq import kernels
from trineq.decompositions import figure_ensemble, figure_states
from trineq.states import BipartiteShape, PureState


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture(params=kernels.available_backends())
def kernel_backend(request):
    return kernels.get_backend(request.param)


@pytest.fixture
def two_qubit():
    return BipartiteShape(2, 2)


@pytest.fixture
def bell_plus(two_qubit):
    return PureState(two_qubit, np.array([1, 0, 0, 1]) / np.sqrt(2))


@pytest.fixture
def bell_minus(two_qubit):
    return PureState(two_qubit, np.array([1, 0, 0, -1]) / np.sqrt(2))


@pytest.fixture
def example_pair():
    return figure_states()


@pytest.fixture
def example_half():
    return figure_ensemble(0.5)


def random_hermitian(rng, n):
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return (g + g.conj().T) / 2.0


def random_state_vector(rng, dim):
    v = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return v / np.linalg.norm(v)
