"""Density operators, Bloch vectors and the Hilbert-Schmidt inner product."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, InvalidDensity, OutsideBall, WrongDimension
from .linalg import adjoint, as_matrix, hermitian_eig

__all__ = [
    "IDENTITY2",
    "SIGMA_X",
    "SIGMA_Y",
    "SIGMA_Z",
    "BlochVector",
    "DensityOperator",
    "hs_inner",
    "bloch_to_density",
    "density_to_bloch",
    "validate_density",
    "matrix_of",
]

IDENTITY2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
for _m in (IDENTITY2, SIGMA_X, SIGMA_Y, SIGMA_Z):
    _m.setflags(write=False)

BALL_SLACK = 1e-9


@dataclass(frozen=True)
class BlochVector:
    x: float
    y: float
    z: float

    @property
    def norm(self) -> float:
        return math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.x, self.y, self.z)


@dataclass(frozen=True, eq=False)
class DensityOperator:
    """A validated state.  Build it with :func:`validate_density` or
    :func:`bloch_to_density` rather than directly."""

    matrix: np.ndarray

    def __post_init__(self):
        self.matrix.setflags(write=False)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


def matrix_of(m) -> np.ndarray:
    """Accept a DensityOperator or anything array-like; return the matrix."""
    if isinstance(m, DensityOperator):
        return m.matrix
    return as_matrix(m)


def hs_inner(a, b) -> complex:
    """Hilbert-Schmidt inner product ``tr(A^H B)``, conjugate-linear in ``a``."""
    a = matrix_of(a)
    b = matrix_of(b)
    if a.shape != b.shape or a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"cannot pair shapes {a.shape} and {b.shape}")
    return complex(np.vdot(a, b))


def bloch_to_density(v) -> DensityOperator:
    if not isinstance(v, BlochVector):
        v = BlochVector(*(float(c) for c in v))
    if v.norm > 1 + BALL_SLACK:
        raise OutsideBall(f"Bloch vector {v.as_tuple()} has length {v.norm:.12g} > 1")
    x, y, z = v.x, v.y, v.z
    m = 0.5 * np.array([[1 + z, x - 1j * y], [x + 1j * y, 1 - z]], dtype=complex)
    return DensityOperator(m)


def density_to_bloch(rho) -> BlochVector:
    m = matrix_of(rho)
    if m.shape != (2, 2):
        raise WrongDimension(f"Bloch vectors need a qubit state, got shape {m.shape}")
    return BlochVector(
        float(np.trace(m @ SIGMA_X).real),
        float(np.trace(m @ SIGMA_Y).real),
        float(np.trace(m @ SIGMA_Z).real),
    )


def validate_density(m, tol: float = 1e-10) -> DensityOperator:
    """Check Hermiticity, unit trace and positivity, reporting every failure.

    The positivity floor is ``-max(tol, 1e-9)`` so that pure states carrying
    roundoff in their zero eigenvalue still pass.

    Raises
    ------
    InvalidDensity
        With one ``(kind, deviation)`` entry per violated condition.
    """
    a = as_matrix(m)
    if a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"density matrix must be square, got {a.shape}")
    violations = []
    herm_dev = float(np.max(np.abs(a - adjoint(a)))) if a.size else 0.0
    if herm_dev > tol:
        violations.append(("NotHermitian", herm_dev))
    trace_dev = abs(complex(np.trace(a)) - 1.0)
    if trace_dev > tol:
        violations.append(("TraceNotOne", trace_dev))
    lam_min = float(hermitian_eig(0.5 * (a + adjoint(a))).eigenvalues[-1])
    if lam_min < -max(tol, 1e-9):
        violations.append(("NotPSD", -lam_min))
    if violations:
        raise InvalidDensity(violations)
    return DensityOperator(a)
