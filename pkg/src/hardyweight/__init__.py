"""Improved discrete Hardy weight on the half-line.

A library and CLI around the weight w(n) = 2 - sqrt(1 + 1/n) - sqrt(1 - 1/n),
which strictly improves the classical Hardy weight 1/(2n)^2 on {1, 2, ...}:
exact rational series coefficients, the generating ground state sqrt(n),
ground-state-transform operator identities, and a seeded numerical
verification battery with truncated-pencil eigenvalue scans.
"""

from ._kernels import BACKEND
from .eigen import TruncatedOperatorPair, min_generalized_eigenvalue
from .operators import (
    apply_dirichlet_laplacian,
    apply_weighted_laplacian,
    energy,
    gst_defect,
    unitarity_defect,
    weighted_form,
    weighted_inner,
)
from .sequences import CompactSequence
from .verify import (
    VerificationConfig,
    VerificationReport,
    classical_gap_from_increments,
    ground_state_residual,
    hardy_gap,
    random_test_sequence,
    run_verification,
)
from .weights import (
    Weight,
    binomial_half,
    classical_hardy_weight,
    classical_weight,
    ground_state,
    ground_state_weight,
    improved_weight,
    improved_weight_closed,
    improved_weight_series,
    improved_weight_series_exact,
    series_coefficient,
    tabulated_weight,
    unit_weight,
    weight_from_positive_solution,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CompactSequence",
    "TruncatedOperatorPair",
    "VerificationConfig",
    "VerificationReport",
    "Weight",
    "apply_dirichlet_laplacian",
    "apply_weighted_laplacian",
    "binomial_half",
    "classical_gap_from_increments",
    "classical_hardy_weight",
    "classical_weight",
    "energy",
    "ground_state",
    "ground_state_residual",
    "ground_state_weight",
    "gst_defect",
    "hardy_gap",
    "improved_weight",
    "improved_weight_closed",
    "improved_weight_series",
    "improved_weight_series_exact",
    "min_generalized_eigenvalue",
    "random_test_sequence",
    "run_verification",
    "series_coefficient",
    "tabulated_weight",
    "unit_weight",
    "unitarity_defect",
    "weight_from_positive_solution",
    "weighted_form",
    "weighted_inner",
]
