"""sigma-classicality decisions.

A state is sigma-classical when some representation ``P_sigma + N`` with
``g N = 0`` is entrywise nonnegative.  The best nullspace shift is found with
the max-min program

    maximize t  subject to  p(k) + sum_j c_j N_j(k) >= t  for all k,

and the state is classical iff the optimum ``t*`` is nonnegative (up to
``DECISION_TOL``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import UnknownCatalogId, WrongDimension
from .frame import MeasurementSet, outcome_distribution
from .linalg import DEFAULT_RANK_TOL, fractional_pseudo_power, nullspace_basis
from .quasiprob import QuasiprobVector
from .simplex import simplex_max
from .states import BlochVector

__all__ = [
    "DECISION_TOL",
    "IMAG_TOL",
    "ClassicalityVerdict",
    "RegionScan",
    "maxmin_over_nullspace",
    "sigma_classical",
    "closed_form_oracle",
    "region_scan",
    "bloch_grid",
]

DECISION_TOL = 1e-9
IMAG_TOL = 1e-9
SPHERE_SLACK = 1e-12


@dataclass(frozen=True, eq=False)
class ClassicalityVerdict:
    """Outcome of :func:`sigma_classical`.

    ``imag_residual`` is the smallest achievable max-norm of the imaginary
    part over all nullspace shifts; above ``IMAG_TOL`` the state is declared
    nonclassical regardless of ``maxmin_value``.
    """

    classical: bool
    boundary: bool
    maxmin_value: float
    witness: QuasiprobVector
    nullspace_coefficients: np.ndarray
    imag_residual: float = 0.0

    @property
    def complex_obstruction(self) -> bool:
        return self.imag_residual > IMAG_TOL


@dataclass(frozen=True, eq=False)
class RegionScan:
    sigma: float
    step: float
    points: np.ndarray
    classical: np.ndarray
    maxmin: np.ndarray

    @property
    def classical_fraction(self) -> float:
        return float(np.count_nonzero(self.classical)) / len(self.classical)


def maxmin_over_nullspace(p_canonical, nullbasis) -> tuple[float, np.ndarray]:
    """Maximize the smallest entry of ``p + sum_j c_j N_j`` over real ``c``.

    Returns ``(t_star, c)``.  With an empty basis this is ``min(p)``.
    """
    p = np.asarray(p_canonical, dtype=float).reshape(-1)
    basis = [np.asarray(v, dtype=float).reshape(-1) for v in nullbasis]
    if not basis:
        return float(p.min()), np.zeros(0)
    nmat = np.column_stack(basis)
    m = nmat.shape[1]
    shift = float(p.min())
    # t = s + shift with s, c free, split into positive parts:
    # x = (s+, s-, c+, c-);  s - N_k c <= p_k - shift
    a_ub = np.hstack([np.ones((len(p), 1)), -np.ones((len(p), 1)), -nmat, nmat])
    objective = np.zeros(2 + 2 * m)
    objective[0], objective[1] = 1.0, -1.0
    x, _ = simplex_max(objective, a_ub, p - shift)
    coeffs = x[2 : 2 + m] - x[2 + m :]
    t_star = float((p + nmat @ coeffs).min())
    return t_star, coeffs


class _Classifier:
    """Caches the pseudo-power and nullspace of one set at one sigma."""

    def __init__(self, mset: MeasurementSet, sigma: float, tol: float = DEFAULT_RANK_TOL):
        self.mset = mset
        self.sigma = sigma
        spec = mset.spectrum(tol)
        self.power = None if sigma == 0 else fractional_pseudo_power(spec, -sigma)
        null = nullspace_basis(spec)
        self.nmat = np.column_stack(null) if null else np.zeros((mset.size, 0), dtype=complex)
        self.real_null = bool(np.all(np.abs(self.nmat.imag) <= 1e-12))
        if self.nmat.shape[1] and not self.real_null:
            self._prepare_complex_split()

    def _prepare_complex_split(self):
        # c = a + i b; Im(p + N c) = Im p + M z with z = (a, b)
        re, im = self.nmat.real, self.nmat.imag
        self.imag_map = np.hstack([im, re])
        self.real_map = np.hstack([re, -im])
        u, s, vt = np.linalg.svd(self.imag_map)
        cutoff = 1e-10 * max(1.0, s.max(initial=0.0))
        rank = int(np.count_nonzero(s > cutoff))
        self.kernel = vt[rank:].T

    def canonical(self, rho) -> QuasiprobVector:
        q = outcome_distribution(self.mset, rho)
        entries = q if self.power is None else self.power @ q
        return QuasiprobVector(self.sigma, entries, self.nmat.shape[1], True, self.mset.labels)

    def verdict(self, rho) -> ClassicalityVerdict:
        p = self.canonical(rho)
        e = p.entries
        m = self.nmat.shape[1]
        imag_small = bool(np.all(np.abs(e.imag) <= 1e-12))
        if m == 0:
            imag_res = float(np.max(np.abs(e.imag)))
            t_star, coeffs = maxmin_over_nullspace(e.real, [])
            shift = np.zeros_like(e)
        elif self.real_null and imag_small:
            imag_res = float(np.max(np.abs(e.imag)))
            t_star, coeffs = maxmin_over_nullspace(e.real, list(self.nmat.real.T))
            shift = self.nmat.real @ coeffs
        else:
            t_star, coeffs, shift, imag_res = self._complex_verdict(e)
        witness = p if m == 0 else p.shifted(shift)
        ok = t_star >= -DECISION_TOL and imag_res <= IMAG_TOL
        return ClassicalityVerdict(
            ok, abs(t_star) <= DECISION_TOL, t_star, witness, coeffs, imag_res
        )

    def _complex_verdict(self, e):
        if not hasattr(self, "kernel"):
            self._prepare_complex_split()
        m = self.nmat.shape[1]
        z0, *_ = np.linalg.lstsq(self.imag_map, -e.imag, rcond=None)
        imag_res = float(np.max(np.abs(e.imag + self.imag_map @ z0)))
        p_eff = e.real + self.real_map @ z0
        n_eff = self.real_map @ self.kernel
        t_star, w = maxmin_over_nullspace(p_eff, list(n_eff.T))
        z = z0 + self.kernel @ w
        coeffs = z[:m] + 1j * z[m:]
        return t_star, coeffs, self.nmat @ coeffs, imag_res


def sigma_classical(mset: MeasurementSet, rho, sigma: float = 1.0, tol: float = DEFAULT_RANK_TOL) -> ClassicalityVerdict:
    """Decide whether ``rho`` is sigma-classical for ``mset``.

    For invertible ``g`` this is a sign check of ``g^-sigma Q``; otherwise the
    nullspace shift maximizing the smallest entry is used as the witness.
    Complex representations are admitted only if a nullspace shift makes them
    real; otherwise the verdict is nonclassical with ``imag_residual`` set.
    """
    return _Classifier(mset, sigma, tol).verdict(rho)


def closed_form_oracle(povm_id: str, sigma: float, v, slack: float = 0.0) -> bool:
    """Evaluate the analytic classicality inequalities of a catalog POVM.

    ``slack`` loosens every inequality by the given amount (0 = exact).
    """
    if isinstance(v, BlochVector):
        x, y, z = v.as_tuple()
    else:
        x, y, z = (float(c) for c in v)
    if povm_id == "tetrahedron":
        b = 3.0 ** (1 - sigma)
        return (
            -(3.0**-sigma) <= z + slack
            and z <= b + 2 * math.sqrt(2) * x + slack
            and abs(y) <= (b - z - math.sqrt(2) * x) / math.sqrt(6) + slack
        )
    if povm_id == "trine":
        return x >= -(2.0**-sigma) - slack and abs(y) <= (2.0 ** (1 - sigma) - x) / math.sqrt(3) + slack
    if povm_id == "octahedron":
        return 3.0 ** (1 - sigma) - abs(x) - abs(y) - abs(z) >= -slack
    if povm_id == "square":
        return 2.0 ** (1 - sigma) - abs(x) - abs(y) >= -slack
    raise UnknownCatalogId(f"no closed form for {povm_id!r}")


def bloch_grid(step: float) -> np.ndarray:
    """Points of ``step * Z^3`` inside the closed unit ball, x-major order."""
    if not 0 < step <= 0.5:
        raise ValueError(f"step must lie in (0, 0.5], got {step}")
    n = int(math.floor(1.0 / step + 1e-9))
    axis = np.arange(-n, n + 1) * step
    xs, ys, zs = np.meshgrid(axis, axis, axis, indexing="ij")
    pts = np.column_stack([xs.ravel(), ys.ravel(), zs.ravel()])
    inside = np.einsum("ij,ij->i", pts, pts) <= (1.0 + SPHERE_SLACK) ** 2
    return pts[inside]


def region_scan(mset: MeasurementSet, sigma: float = 1.0, step: float = 0.1, tol: float = DEFAULT_RANK_TOL) -> RegionScan:
    """Classify every Bloch-grid point of spacing ``step``."""
    if mset.dim != 2:
        raise WrongDimension(f"region scans need a qubit measurement, got dimension {mset.dim}")
    pts = bloch_grid(step)
    clf = _Classifier(mset, sigma, tol)
    flags = np.empty(len(pts), dtype=bool)
    values = np.empty(len(pts))
    for i, (x, y, z) in enumerate(pts):
        # grid points may overshoot the sphere by SPHERE_SLACK; skip validation
        rho = 0.5 * np.array([[1 + z, x - 1j * y], [x + 1j * y, 1 - z]])
        v = clf.verdict(rho)
        flags[i] = v.classical
        values[i] = v.maxmin_value
    return RegionScan(sigma, step, pts, flags, values)
