"""Measurement-based quasiprobabilities for finite-dimensional quantum states.

Given measurement operators ``{Pi_k}``, the outcome vector is
``Q(k) = tr(Pi_k^H rho)`` and the sigma-parametrized quasiprobability is
``P_sigma = g^-sigma Q`` with ``g`` the Hilbert-Schmidt Gram matrix of the
operators.  Singular ``g`` (overcomplete sets) is handled by pseudo-powers plus
a max-min search over its nullspace; incomplete sets leave an invisible
complement of the state.
"""

__version__ = "0.1.0"

from .catalog import CATALOG_IDS, catalog, standard_basis_pair
from .classicality import (
    ClassicalityVerdict,
    RegionScan,
    closed_form_oracle,
    maxmin_over_nullspace,
    region_scan,
    sigma_classical,
)
from .frame import (
    CompletenessClass,
    MeasurementSet,
    PovmReport,
    classify_completeness,
    dual_frame,
    metric_spectrum,
    metric_tensor,
    outcome_distribution,
    validate_povm,
)
from .linalg import MetricSpectrum, fractional_pseudo_power, hermitian_eig, nullspace_basis
from .quasiprob import (
    Complement,
    QuasiprobVector,
    complement,
    kd_measurement_set,
    kirkwood_dirac,
    quasiprob,
    reconstruct,
)
from .states import (
    BlochVector,
    DensityOperator,
    bloch_to_density,
    density_to_bloch,
    hs_inner,
    validate_density,
)

__all__ = [
    "BlochVector",
    "CATALOG_IDS",
    "ClassicalityVerdict",
    "Complement",
    "CompletenessClass",
    "DensityOperator",
    "MeasurementSet",
    "MetricSpectrum",
    "PovmReport",
    "QuasiprobVector",
    "RegionScan",
    "bloch_to_density",
    "catalog",
    "classify_completeness",
    "closed_form_oracle",
    "complement",
    "density_to_bloch",
    "dual_frame",
    "fractional_pseudo_power",
    "hermitian_eig",
    "hs_inner",
    "kd_measurement_set",
    "kirkwood_dirac",
    "maxmin_over_nullspace",
    "metric_spectrum",
    "metric_tensor",
    "nullspace_basis",
    "outcome_distribution",
    "quasiprob",
    "reconstruct",
    "region_scan",
    "sigma_classical",
    "standard_basis_pair",
    "validate_density",
    "validate_povm",
]
