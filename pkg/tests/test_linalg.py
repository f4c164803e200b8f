import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qproj.catalog import catalog
from qproj.errors import NoConvergence, NonHermitianInput
from qproj.linalg import fractional_pseudo_power, hermitian_eig, nullspace_basis, range_projector

from .conftest import CATALOG

N4 = np.ones((4, 1))
TETRA_G = (np.ones((4, 4)) + 2 * np.eye(4)) / 12


def projector(vectors):
    v = np.column_stack(vectors)
    q, _ = np.linalg.qr(v)
    return q @ q.conj().T


def test_diagonal_input_is_left_alone():
    s = hermitian_eig(np.diag([1 / 2, 1 / 6, 1 / 6, 1 / 6]))
    np.testing.assert_allclose(s.eigenvalues, [1 / 2, 1 / 6, 1 / 6, 1 / 6], atol=1e-15)
    np.testing.assert_allclose(s.eigenvectors, np.eye(4), atol=1e-15)


def test_tetrahedron_spectrum():
    s = hermitian_eig(TETRA_G)
    np.testing.assert_allclose(s.eigenvalues, [1 / 2, 1 / 6, 1 / 6, 1 / 6], atol=1e-14)
    top = s.eigenvectors[:, 0]
    np.testing.assert_allclose(np.abs(top), np.full(4, 0.5), atol=1e-12)
    assert s.rank == 4


def test_pauli_x_spectrum():
    s = hermitian_eig([[0, 1], [1, 0]])
    np.testing.assert_allclose(s.eigenvalues, [1, -1], atol=1e-15)


def test_rejects_non_hermitian():
    with pytest.raises(NonHermitianInput):
        hermitian_eig([[0, 1], [0, 0]])
    with pytest.raises(NonHermitianInput):
        hermitian_eig(np.ones((2, 3)))


def test_sweep_cap():
    rng = np.random.default_rng(1)
    x = rng.normal(size=(6, 6))
    with pytest.raises(NoConvergence):
        hermitian_eig(x + x.T, max_sweeps=1)


def test_reconstruction_against_numpy(rng):
    # 100 random Hermitian matrices, d <= 8; numpy.linalg.eigh is the oracle
    for _ in range(100):
        d = int(rng.integers(1, 9))
        x = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
        h = x + x.conj().T
        s = hermitian_eig(h)
        assert np.linalg.norm(s.reconstruct() - h) < 1e-9
        v = s.eigenvectors
        assert np.max(np.abs(v.conj().T @ v - np.eye(d))) < 1e-10
        assert np.all(np.diff(s.eigenvalues) <= 0)
        np.testing.assert_allclose(s.eigenvalues, np.linalg.eigvalsh(h)[::-1], atol=1e-10)


@pytest.mark.parametrize("a", [-1.25, -1, -0.5, 0, 0.37, 0.5, 1])
def test_tetrahedron_power_formula(a):
    expected = 6.0**-a * np.eye(4) + (2.0**-a - 6.0**-a) / 4 * (N4 @ N4.T)
    got = fractional_pseudo_power(hermitian_eig(TETRA_G), a)
    np.testing.assert_allclose(got, expected, atol=1e-12)


def test_identity_power():
    np.testing.assert_allclose(fractional_pseudo_power(hermitian_eig(np.eye(3)), 0.37), np.eye(3))


def test_singular_pseudo_inverse():
    np.testing.assert_allclose(
        fractional_pseudo_power(hermitian_eig(np.diag([4.0, 0.0])), -1), np.diag([0.25, 0]), atol=1e-15
    )


def test_inverse_matches_numpy(rng):
    x = rng.normal(size=(5, 5)) + 1j * rng.normal(size=(5, 5))
    h = x @ x.conj().T + np.eye(5)
    np.testing.assert_allclose(fractional_pseudo_power(hermitian_eig(h), -1), np.linalg.inv(h), atol=1e-9)


def test_fractional_power_matches_scipy(rng):
    scipy_linalg = pytest.importorskip("scipy.linalg")
    x = rng.normal(size=(4, 4))
    h = x @ x.T + 0.5 * np.eye(4)
    for a in (-0.5, 0.3, 1.7):
        np.testing.assert_allclose(
            fractional_pseudo_power(hermitian_eig(h), a), scipy_linalg.fractional_matrix_power(h, a), atol=1e-9
        )


@pytest.mark.parametrize("name", CATALOG)
def test_semigroup_and_projection(name):
    spec = hermitian_eig(catalog(name).metric)
    powers = (-1.25, -1, -0.5, 0.5, 1)
    for a in powers:
        for b in powers:
            lhs = fractional_pseudo_power(spec, a) @ fractional_pseudo_power(spec, b)
            assert np.linalg.norm(lhs - fractional_pseudo_power(spec, a + b)) < 1e-8
    proj = fractional_pseudo_power(spec, 1) @ fractional_pseudo_power(spec, -1)
    assert np.linalg.norm(proj - range_projector(spec)) < 1e-9
    assert np.linalg.norm(proj @ proj - proj) < 1e-9


def test_square_nullspace():
    null = nullspace_basis(catalog("square").spectrum())
    assert len(null) == 1
    np.testing.assert_allclose(projector(null), projector([np.array([1, 1, -1, -1.0])]), atol=1e-12)


def test_octahedron_nullspace():
    null = nullspace_basis(catalog("octahedron").spectrum())
    assert len(null) == 2
    expected = [np.array([2, 2, -1, -1, -1, -1.0]), np.array([0, 0, 1, 1, -1, -1.0])]
    np.testing.assert_allclose(projector(null), projector(expected), atol=1e-12)


def test_tetrahedron_nullspace_empty():
    assert nullspace_basis(catalog("tetrahedron").spectrum()) == []


@pytest.mark.parametrize("name", CATALOG)
def test_nullspace_is_orthonormal_and_annihilated(name):
    mset = catalog(name)
    null = nullspace_basis(mset.spectrum())
    for i, v in enumerate(null):
        assert np.linalg.norm(mset.metric @ v) < 1e-9
        for j, w in enumerate(null):
            assert abs(np.vdot(v, w) - (i == j)) < 1e-12


@settings(max_examples=60, deadline=None)
@given(
    st.integers(min_value=1, max_value=6),
    st.integers(min_value=0, max_value=5),
    st.integers(min_value=0, max_value=2**32 - 1),
)
def test_psd_gram_rank(d, r, seed):
    # Gram matrix of r random vectors in C^d has rank min(r, d)
    rng = np.random.default_rng(seed)
    r = min(r, d)
    x = rng.normal(size=(d, r)) + 1j * rng.normal(size=(d, r))
    g = x @ x.conj().T
    s = hermitian_eig(g)
    assert s.rank == r
    assert s.eigenvalues[-1] >= -s.tolerance_used
    for v in nullspace_basis(s):
        assert np.linalg.norm(g @ v) < 1e-9
