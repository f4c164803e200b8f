"""Measurement-operator sets and the frame quantities derived from them.

A set ``{Pi_k}`` need not be a POVM; operators may be non-Hermitian (weak
measurements).  All outcome-indexed vectors follow the construction order of
the operators.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatch
from .linalg import DEFAULT_RANK_TOL, MetricSpectrum, adjoint, as_matrix, fractional_pseudo_power, hermitian_eig
from .states import matrix_of

__all__ = [
    "MeasurementSet",
    "PovmReport",
    "CompletenessClass",
    "metric_tensor",
    "metric_spectrum",
    "outcome_distribution",
    "dual_frame",
    "classify_completeness",
    "validate_povm",
]


@dataclass(frozen=True, eq=False)
class MeasurementSet:
    """Ordered list of ``d x d`` measurement operators.

    ``operators`` is stored as a read-only array of shape ``(n, d, d)``.
    """

    operators: np.ndarray
    labels: tuple[str, ...] = ()
    _spectra: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        ops = [as_matrix(op) for op in self.operators]
        if not ops:
            raise ValueError("a measurement set needs at least one operator")
        d = ops[0].shape[0]
        for k, op in enumerate(ops):
            if op.shape != (d, d):
                raise DimensionMismatch(
                    f"operator {k} has shape {op.shape}, expected ({d}, {d})"
                )
        stack = np.stack(ops)
        stack.setflags(write=False)
        object.__setattr__(self, "operators", stack)
        labels = tuple(self.labels) if self.labels else tuple(f"k{i}" for i in range(len(ops)))
        if len(labels) != len(ops):
            raise ValueError(f"{len(labels)} labels for {len(ops)} operators")
        object.__setattr__(self, "labels", tuple(str(s) for s in labels))

    @property
    def dim(self) -> int:
        return self.operators.shape[1]

    @property
    def size(self) -> int:
        return self.operators.shape[0]

    def __len__(self):
        return self.size

    def flat(self) -> np.ndarray:
        """Operators as rows of an ``(n, d*d)`` matrix."""
        return self.operators.reshape(self.size, -1)

    @property
    def metric(self) -> np.ndarray:
        g = self._spectra.get("metric")
        if g is None:
            f = self.flat()
            g = np.conj(f) @ f.T
            g.setflags(write=False)
            self._spectra.setdefault("metric", g)
        return g

    def spectrum(self, tol: float = DEFAULT_RANK_TOL) -> MetricSpectrum:
        # dict.setdefault publishes atomically; a racing duplicate is identical
        spec = self._spectra.get(tol)
        if spec is None:
            spec = self._spectra.setdefault(tol, hermitian_eig(self.metric, tol))
        return spec


@dataclass(frozen=True)
class PovmReport:
    is_povm: bool
    hermiticity_defect: float
    min_eigenvalue: float
    completeness_defect: float
    tol: float


@dataclass(frozen=True)
class CompletenessClass:
    span_rank: int
    outcome_count: int
    dim: int

    @property
    def is_complete(self) -> bool:
        return self.span_rank == self.dim**2

    @property
    def is_overcomplete(self) -> bool:
        return self.span_rank < self.outcome_count


def metric_tensor(mset: MeasurementSet) -> np.ndarray:
    """Gram matrix ``g[k, l] = tr(Pi_k^H Pi_l)``."""
    return mset.metric.copy()


def metric_spectrum(mset: MeasurementSet, tol: float = DEFAULT_RANK_TOL) -> MetricSpectrum:
    return mset.spectrum(tol)


def outcome_distribution(mset: MeasurementSet, rho) -> np.ndarray:
    """Outcome vector ``Q[k] = tr(Pi_k^H rho)`` (complex for weak sets)."""
    r = matrix_of(rho)
    if r.shape != (mset.dim, mset.dim):
        raise DimensionMismatch(f"state shape {r.shape} does not match set dimension {mset.dim}")
    return np.conj(mset.flat()) @ r.reshape(-1)


def _pseudo_power(mset: MeasurementSet, a: float, tol: float) -> np.ndarray:
    if a == 0:
        return np.eye(mset.size, dtype=complex)
    return fractional_pseudo_power(mset.spectrum(tol), a)


def dual_frame(mset: MeasurementSet, sigma: float, tol: float = DEFAULT_RANK_TOL) -> np.ndarray:
    """Operators ``Delta_sigma(j) = sum_l (g^-sigma)[l, j] Pi_l``, shape ``(n, d, d)``.

    ``sigma = 0`` returns the measurement operators themselves; for singular
    ``g`` the power is taken on its range.
    """
    w = _pseudo_power(mset, -sigma, tol)
    return (w.T @ mset.flat()).reshape(mset.operators.shape)


def classify_completeness(mset: MeasurementSet, tol: float = DEFAULT_RANK_TOL) -> CompletenessClass:
    return CompletenessClass(mset.spectrum(tol).rank, mset.size, mset.dim)


def validate_povm(mset: MeasurementSet, tol: float = 1e-10) -> PovmReport:
    """Measure how far the set is from a POVM.

    ``min_eigenvalue`` is taken over the Hermitian parts of the operators.
    """
    ops = mset.operators
    herm = float(max(np.max(np.abs(op - adjoint(op))) for op in ops))
    lam_min = min(
        float(hermitian_eig(0.5 * (op + adjoint(op))).eigenvalues[-1]) for op in ops
    )
    completeness = float(np.max(np.abs(ops.sum(axis=0) - np.eye(mset.dim))))
    ok = herm <= tol and lam_min >= -tol and completeness <= tol
    return PovmReport(ok, herm, lam_min, completeness, tol)
