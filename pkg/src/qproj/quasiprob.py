"""sigma-parametrized quasiprobabilities, reconstruction, invisible complements
and Kirkwood-Dirac distributions."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NotOrthonormal, VanishingOverlap
from .frame import MeasurementSet, dual_frame, outcome_distribution
from .linalg import DEFAULT_RANK_TOL, fractional_pseudo_power
from .states import matrix_of

__all__ = [
    "QuasiprobVector",
    "Complement",
    "quasiprob",
    "reconstruct",
    "complement",
    "kirkwood_dirac",
    "kd_measurement_set",
]

ORTHO_TOL = 1e-10
OVERLAP_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class QuasiprobVector:
    """Outcome-indexed expansion coefficients ``P_sigma``.

    ``canonical`` is True for the minimum-norm (pseudo-inverse) solution; any
    vector shifted along the nullspace of ``g`` has it set to False.
    """

    sigma: float
    entries: np.ndarray
    nullspace_dim: int = 0
    canonical: bool = True
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        e = np.array(self.entries, dtype=complex).reshape(-1)
        e.setflags(write=False)
        object.__setattr__(self, "entries", e)

    def __len__(self):
        return self.entries.shape[0]

    def shifted(self, delta) -> "QuasiprobVector":
        """Copy with ``delta`` (a nullspace combination) added."""
        return QuasiprobVector(
            self.sigma, self.entries + np.asarray(delta), self.nullspace_dim, False, self.labels
        )


@dataclass(frozen=True, eq=False)
class Complement:
    nu: np.ndarray
    norm: float


def quasiprob(mset: MeasurementSet, rho, sigma: float = 1.0, tol: float = DEFAULT_RANK_TOL) -> QuasiprobVector:
    """``P_sigma = g^-sigma Q`` with the power taken on the range of ``g``."""
    q = outcome_distribution(mset, rho)
    spec = mset.spectrum(tol)
    if sigma == 0:
        entries = q
    else:
        entries = fractional_pseudo_power(spec, -sigma) @ q
    return QuasiprobVector(sigma, entries, spec.nullity, True, mset.labels)


def reconstruct(mset: MeasurementSet, p, sigma: float | None = None, tol: float = DEFAULT_RANK_TOL) -> np.ndarray:
    """Return ``sum_l p(l) Delta_{1-sigma}(l)``.

    ``p`` is a :class:`QuasiprobVector` (its ``sigma`` is used) or a plain
    vector together with an explicit ``sigma``.
    """
    if isinstance(p, QuasiprobVector):
        sigma = p.sigma if sigma is None else sigma
        entries = p.entries
    else:
        if sigma is None:
            raise TypeError("sigma is required when p is a plain vector")
        entries = np.asarray(p, dtype=complex).reshape(-1)
    if entries.shape[0] != mset.size:
        raise DimensionMismatch(f"{entries.shape[0]} coefficients for {mset.size} outcomes")
    deltas = dual_frame(mset, 1.0 - sigma, tol)
    return np.tensordot(entries, deltas, axes=1)


def complement(mset: MeasurementSet, rho, tol: float = DEFAULT_RANK_TOL) -> Complement:
    """Part of ``rho`` orthogonal to every measurement operator."""
    r = matrix_of(rho)
    nu = r - reconstruct(mset, quasiprob(mset, r, 1.0, tol), tol=tol)
    return Complement(nu, float(np.linalg.norm(nu)))


def _check_bases(basis_a, basis_b):
    a = np.array(basis_a, dtype=complex)
    b = np.array(basis_b, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or b.shape != a.shape:
        raise DimensionMismatch(f"bases must be d x d arrays of row vectors, got {a.shape} and {b.shape}")
    d = a.shape[0]
    for name, m in (("A", a), ("B", b)):
        dev = np.max(np.abs(np.conj(m) @ m.T - np.eye(d)))
        if dev > ORTHO_TOL:
            raise NotOrthonormal(f"basis {name} deviates from orthonormality by {dev:.3g}")
    # overlaps[k, l] = <a_k|b_l>
    overlaps = np.conj(a) @ b.T
    bad = np.argwhere(np.abs(overlaps) <= OVERLAP_TOL)
    if bad.size:
        k, l = (int(i) for i in bad[0])
        raise VanishingOverlap((k, l), abs(overlaps[k, l]))
    return a, b, overlaps


def kd_measurement_set(basis_a, basis_b) -> MeasurementSet:
    """Weak-measurement operators whose ``g^-1 Q`` is the KD distribution.

    Outcome ``(k, l)`` is flattened row-major.  The operator is
    ``|b_l><a_k| / <a_k|b_l>``; with ``Q = tr(Pi^H rho)`` this yields
    ``Q(k,l) = <b_l|rho|a_k> / <b_l|a_k>`` and
    ``P(k,l) = <a_k|b_l><b_l|rho|a_k>``.
    """
    a, b, overlaps = _check_bases(basis_a, basis_b)
    d = a.shape[0]
    ops, labels = [], []
    for k in range(d):
        for l in range(d):
            ops.append(np.outer(b[l], np.conj(a[k])) / overlaps[k, l])
            labels.append(f"({k},{l})")
    return MeasurementSet(ops, labels=tuple(labels))


def kirkwood_dirac(basis_a, basis_b, rho) -> QuasiprobVector:
    """``P(k,l) = <a_k|b_l><b_l|rho|a_k>``, flattened row-major over ``(k, l)``."""
    a, b, overlaps = _check_bases(basis_a, basis_b)
    r = matrix_of(rho)
    if r.shape != (a.shape[0],) * 2:
        raise DimensionMismatch(f"state shape {r.shape} does not match basis dimension {a.shape[0]}")
    # sandwich[l, k] = <b_l|rho|a_k>
    sandwich = np.conj(b) @ r @ a.T
    p = overlaps * sandwich.T
    d = a.shape[0]
    labels = tuple(f"({k},{l})" for k in range(d) for l in range(d))
    return QuasiprobVector(1.0, p.reshape(-1), 0, True, labels)
