"""Exact invariant rings of cyclic group actions on two noncommutative
graded algebras: the skew polynomial ring k_{-1}[u,v] and the graded
down-up algebras A(alpha, beta).

The package computes invariant rings degree by degree over the cyclotomic
field Q(lambda), determines the minimal generating degree beta(g), and
machine-verifies the closed-form orbit-sum identities and kernel-vector
certificates behind the degree bounds.
"""

from .cyclo import CycloNum, cyclotomic_polynomial, root_power
from .ncalg import (
    AlgebraSpec,
    NcPolynomial,
    downup_spec,
    monomial_basis,
    multiply,
    reduce_word,
    skew_spec,
)
from .action import (
    GroupAction,
    apply_power,
    invariant_basis,
    invariant_dimension_trace,
    orbit_sum,
    reynolds,
    standard_action,
    verify_automorphism,
)
from .gendeg import (
    GenerationReport,
    GradedSubspace,
    compute_beta,
    kernel_annihilation,
    product_matrix,
    product_span,
    rank,
)
from .formulas import (
    canonical_basis,
    closed_form_product,
    kernel_vector,
    normalize_index,
    verify_identity,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraSpec",
    "CycloNum",
    "GenerationReport",
    "GradedSubspace",
    "GroupAction",
    "NcPolynomial",
    "apply_power",
    "canonical_basis",
    "closed_form_product",
    "compute_beta",
    "cyclotomic_polynomial",
    "downup_spec",
    "invariant_basis",
    "invariant_dimension_trace",
    "kernel_annihilation",
    "kernel_vector",
    "monomial_basis",
    "multiply",
    "normalize_index",
    "orbit_sum",
    "product_matrix",
    "product_span",
    "rank",
    "reduce_word",
    "reynolds",
    "root_power",
    "skew_spec",
    "standard_action",
    "verify_automorphism",
    "verify_identity",
]
