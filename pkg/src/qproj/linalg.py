"""Dense Hermitian linear algebra.

Matrices are plain ``numpy`` arrays of ``complex128``.  The eigensolver is a
cyclic complex Jacobi method; everything downstream (pseudo-powers, ranks,
nullspaces) is derived from the resulting :class:`MetricSpectrum`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NoConvergence, NonHermitianInput

__all__ = [
    "MetricSpectrum",
    "hermitian_eig",
    "fractional_pseudo_power",
    "nullspace_basis",
    "range_projector",
    "as_matrix",
    "adjoint",
]

HERMITIAN_TOL = 1e-10
DEFAULT_RANK_TOL = 1e-9
MAX_SWEEPS = 100


def as_matrix(m) -> np.ndarray:
    """Copy ``m`` into a 2-D complex array, rejecting ragged or 1-D input."""
    a = np.array(m, dtype=complex)
    if a.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {a.shape}")
    return a


def adjoint(m) -> np.ndarray:
    return np.conj(np.asarray(m)).T


@dataclass(frozen=True, eq=False)
class MetricSpectrum:
    """Eigen-decomposition ``M = V diag(eigenvalues) V^H`` with a rank decision.

    Attributes
    ----------
    eigenvalues : ndarray, shape (n,)
        Real eigenvalues in descending order.
    eigenvectors : ndarray, shape (n, n)
        Unitary matrix whose columns are the matching eigenvectors.
    rank : int
        Number of eigenvalues strictly above ``tolerance_used``.
    tolerance_used : float
        Absolute cutoff, ``tol * max(lambda_max, 1)``.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    rank: int
    tolerance_used: float

    def __post_init__(self):
        self.eigenvalues.setflags(write=False)
        self.eigenvectors.setflags(write=False)

    @property
    def dim(self) -> int:
        return self.eigenvalues.shape[0]

    @property
    def nullity(self) -> int:
        return self.dim - self.rank

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ adjoint(v)


def _off_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.linalg.norm(off))


def _jacobi(a: np.ndarray, max_sweeps: int) -> tuple[np.ndarray, np.ndarray]:
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    scale = float(np.linalg.norm(a))
    target = 1e-12 * scale
    # entries this small cannot block convergence; rotating them only mixes
    # roundoff phases into otherwise real eigenvectors
    negligible = 1e-14 * scale / max(n, 1)
    sweeps = 0
    while _off_norm(a) > target:
        if sweeps == max_sweeps:
            raise NoConvergence(
                f"Jacobi iteration did not converge in {max_sweeps} sweeps "
                f"(off-diagonal norm {_off_norm(a):.3e})"
            )
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                mag = abs(apq)
                if mag <= negligible:
                    continue
                phase = np.conj(apq / mag)
                theta = (a[q, q].real - a[p, p].real) / (2.0 * mag)
                t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                # phase-align the pivot to a real positive number, then rotate
                rot = np.array([[c, s], [-s * phase, c * phase]])
                idx = [p, q]
                a[:, idx] = a[:, idx] @ rot
                a[idx, :] = adjoint(rot) @ a[idx, :]
                a[p, q] = a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                v[:, idx] = v[:, idx] @ rot
    return np.diag(a).real.copy(), _fix_phases(v)


def _fix_phases(v: np.ndarray) -> np.ndarray:
    """Make the first largest-modulus entry of each column real and positive."""
    for j in range(v.shape[1]):
        col = v[:, j]
        mags = np.abs(col)
        i = int(np.flatnonzero(mags >= mags.max() - 1e-12)[0])
        v[:, j] = col * (np.conj(col[i]) / mags[i])
    return v


def hermitian_eig(m, tol: float = DEFAULT_RANK_TOL, max_sweeps: int = MAX_SWEEPS) -> MetricSpectrum:
    """Diagonalize a Hermitian matrix with cyclic Jacobi rotations.

    Sweeps visit the strict upper triangle in row-major order and stop once the
    off-diagonal Frobenius norm falls below ``1e-12 * ||M||_F``.

    Raises
    ------
    NonHermitianInput
        If ``max|M - M^H| > 1e-10`` or ``M`` is not square.
    NoConvergence
        If ``max_sweeps`` sweeps do not reach the target.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    a = as_matrix(m)
    if a.shape[0] != a.shape[1]:
        raise NonHermitianInput(f"matrix is not square: shape {a.shape}")
    if a.size and np.max(np.abs(a - adjoint(a))) > HERMITIAN_TOL:
        raise NonHermitianInput(
            f"matrix is not Hermitian (max |M - M^H| = {np.max(np.abs(a - adjoint(a))):.3e})"
        )
    a = 0.5 * (a + adjoint(a))
    evals, evecs = _jacobi(a, max_sweeps)

    order = np.argsort(-evals, kind="stable")
    evals = evals[order]
    evecs = evecs[:, order]
    lam_max = float(evals[0]) if evals.size else 0.0
    cutoff = tol * max(lam_max, 1.0)
    rank = int(np.count_nonzero(evals > cutoff))
    return MetricSpectrum(evals, evecs, rank, cutoff)


def fractional_pseudo_power(spec: MetricSpectrum, a: float) -> np.ndarray:
    """Return ``sum_{lambda_i > tol} lambda_i**a v_i v_i^H``.

    The power acts on the range only, so ``a = -1`` is the Moore-Penrose
    pseudo-inverse and ``a = 0`` is the orthogonal projector onto the range.
    Eigenvalues in ``(-tol, tol]`` are treated as exact zeros.
    """
    lam = spec.eigenvalues
    if lam.size and lam[-1] < -spec.tolerance_used:
        raise ValueError(
            f"spectrum is not positive semidefinite (smallest eigenvalue {lam[-1]:.3e})"
        )
    keep = lam > spec.tolerance_used
    v = spec.eigenvectors[:, keep]
    return (v * lam[keep] ** a) @ adjoint(v)


def range_projector(spec: MetricSpectrum) -> np.ndarray:
    keep = spec.eigenvalues > spec.tolerance_used
    v = spec.eigenvectors[:, keep]
    return v @ adjoint(v)


def nullspace_basis(spec: MetricSpectrum) -> list[np.ndarray]:
    """Orthonormal eigenvectors whose eigenvalue is at or below the cutoff."""
    null = spec.eigenvalues <= spec.tolerance_used
    return [spec.eigenvectors[:, i].copy() for i in np.flatnonzero(null)]
