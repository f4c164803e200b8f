import numpy as np
import pytest

from qproj.states import bloch_to_density

CATALOG = ("tetrahedron", "trine", "octahedron", "square")


def random_bloch(rng, n):
    """Uniform samples from the closed unit ball."""
    v = rng.normal(size=(n, 3))
    v /= np.linalg.norm(v, axis=1, keepdims=True)
    return v * rng.uniform(size=(n, 1)) ** (1 / 3)


def random_density(rng, d):
    g = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    r = g @ g.conj().T
    return r / np.trace(r).real


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def qubit_states(rng):
    return [bloch_to_density(v) for v in random_bloch(rng, 50)]
