"""The four qubit measurements used as reference cases, plus basis pairs for
Kirkwood-Dirac distributions.

Entries are built from closed-form radicals and ``exp(2 pi i / 3)`` so that the
printed metric tensors are met to machine precision.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from .errors import DegenerateBasis, UnknownCatalogId
from .frame import MeasurementSet

__all__ = ["CATALOG_IDS", "catalog", "standard_basis_pair", "BASIS_PAIRS"]

CATALOG_IDS = ("tetrahedron", "trine", "octahedron", "square")
BASIS_PAIRS = ("computational_hadamard", "fourier")

OMEGA = cmath.exp(2j * math.pi / 3)
S2 = math.sqrt(2.0)
S3 = math.sqrt(3.0)

KET0 = np.array([1, 0], dtype=complex)
KET1 = np.array([0, 1], dtype=complex)

# Pauli eigenstates, first amplitude real and positive
PAULI_KETS = {
    "x+": np.array([1, 1], dtype=complex) / S2,
    "x-": np.array([1, -1], dtype=complex) / S2,
    "y+": np.array([1, 1j], dtype=complex) / S2,
    "y-": np.array([1, -1j], dtype=complex) / S2,
    "z+": KET0,
    "z-": KET1,
}


def _projector(ket: np.ndarray) -> np.ndarray:
    return np.outer(ket, np.conj(ket))


def _tetrahedron() -> MeasurementSet:
    kets = {3: KET0}
    for j in range(3):
        kets[j] = (KET0 + S2 * OMEGA**j * KET1) / S3
    # |0> first, matching the row order of the printed outcome map
    order = (3, 0, 1, 2)
    return MeasurementSet(
        [0.5 * _projector(kets[j]) for j in order],
        labels=tuple(f"psi{j}" for j in order),
    )


def _trine() -> MeasurementSet:
    kets = [(KET0 + OMEGA**j * KET1) / S2 for j in range(3)]
    return MeasurementSet(
        [(2.0 / 3.0) * _projector(k) for k in kets],
        labels=("psi0", "psi1", "psi2"),
    )


def _octahedron() -> MeasurementSet:
    names = ("x+", "x-", "y+", "y-", "z+", "z-")
    return MeasurementSet([_projector(PAULI_KETS[n]) / 3.0 for n in names], labels=names)


def _square() -> MeasurementSet:
    names = ("x+", "x-", "y+", "y-")
    return MeasurementSet([0.5 * _projector(PAULI_KETS[n]) for n in names], labels=names)


_BUILDERS = {
    "tetrahedron": _tetrahedron,
    "trine": _trine,
    "octahedron": _octahedron,
    "square": _square,
}


def catalog(name: str) -> MeasurementSet:
    """Build one of ``tetrahedron``, ``trine``, ``octahedron``, ``square``.

    Outcome order: tetrahedron (psi3=|0>, psi0, psi1, psi2); trine (psi0,
    psi1, psi2); octahedron (x+, x-, y+, y-, z+, z-); square (x+, x-, y+, y-).
    """
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise UnknownCatalogId(
            f"unknown catalog id {name!r}; expected one of {', '.join(CATALOG_IDS)}"
        ) from None
    return builder()


def standard_basis_pair(kind: str, d: int = 2) -> tuple[np.ndarray, np.ndarray]:
    """Two orthonormal bases as ``(d, d)`` arrays whose rows are the vectors.

    ``computational_hadamard`` is the qubit pair {|0>,|1>}, {|+>,|->}.
    ``fourier`` pairs the computational basis of dimension ``d`` with its
    discrete Fourier transform, so every overlap has modulus ``1/sqrt(d)``.
    """
    if kind == "computational_hadamard":
        a = np.eye(2, dtype=complex)
        b = np.array([PAULI_KETS["x+"], PAULI_KETS["x-"]])
    elif kind == "fourier":
        if d < 2:
            raise ValueError("fourier basis pair needs d >= 2")
        a = np.eye(d, dtype=complex)
        k = np.arange(d)
        b = np.exp(2j * np.pi * np.outer(k, k) / d) / math.sqrt(d)
    else:
        raise ValueError(f"unknown basis pair {kind!r}; expected one of {', '.join(BASIS_PAIRS)}")
    overlaps = np.abs(np.conj(b) @ a.T)
    if overlaps.min() < 1e-10:
        raise DegenerateBasis(f"basis pair {kind!r} has a vanishing overlap")
    return a, b
