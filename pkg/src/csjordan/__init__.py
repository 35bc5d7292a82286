"""Finite-dimensional toolkit for conjugation-symmetric operators.

An antilinear involutive isometry C on C^n singles out the matrices T with
C T C = T*, a Jordan algebra under the symmetrized product.  This package
constructs conjugations and their fixed bases, splits matrices into
symmetric and antisymmetric parts, factors symmetric elements through a
Takagi-based refined polar decomposition, builds structured selfadjoint
perturbations in the style of Weyl and von Neumann, materializes the Jordan
multiplication operator and solves its Sylvester equations, and certifies
structural facts: automorphisms, normality, generation, simplicity, and
irreducibility.  A seeded suite and a CLI drive everything reproducibly.
"""

from . import errors
from .approximation import (
    MAX_INTERVALS,
    PerturbationCertificate,
    c_fixed_diagonalize,
    c_fixed_joint_diagonalize,
    dual_exponent,
    finite_spectrum_approx,
    invertible_approx,
    invertible_path,
    wvn_diagonalize,
    wvn_perturbation,
)
from .conjugation import (
    Conjugation,
    conjugation_from_unitary,
    conjugation_path,
    equivalence_unitary,
    same_conjugation,
    same_symmetry_class,
    standard_conjugation,
)
from .decomposition import (
    PartialConjugation,
    RefinedPolar,
    TakagiFactors,
    extend_partial_conjugation,
    partial_conjugation,
    polar_isometry,
    refined_polar,
    takagi,
)
from .jordan_space import (
    SkewElement,
    SymElement,
    antisymmetric_element,
    antisymmetry_residual,
    coords,
    doubling_conjugation,
    doubling_embedding,
    from_coords,
    is_antisymmetric,
    is_symmetric,
    jordan_product,
    roberts_orthogonal,
    schatten_norm,
    skew_basis,
    skew_part,
    sym_basis,
    sym_part,
    symmetric_element,
    symmetrized_rank_one,
    symmetry_residual,
    trace_norm_witness,
    trace_pair,
    transpose_map,
)
from .matio import (
    conjugation_to_doc,
    doc_to_conjugation,
    doc_to_element,
    doc_to_matrix,
    element_to_doc,
    load_conjugation,
    load_element,
    load_matrix,
    load_report,
    matrix_to_doc,
    save_conjugation,
    save_element,
    save_matrix,
    save_report,
)
from .multiplication import (
    JordanMultiplier,
    MultiplierNormReport,
    multiplier_kernel,
    multiplier_matrix,
    multiplier_norm_report,
    multiplier_spectrum,
    skew_multiplier_matrix,
    solve_sylvester,
)
from .sampling import (
    ginibre,
    haar_unitary,
    random_conjugation,
    random_orthogonal,
    random_selfadjoint,
    random_skew,
    random_symmetric,
    random_unit_vector,
    stream,
)
from .structure import (
    AutomorphismReport,
    NormalityReport,
    automorphism_report,
    generation_dimension,
    irreducibility_check,
    jordan_simplicity_witness,
    normality_report,
)
from .suite import DEFAULT_CHECKS, SuiteConfig, check_names, run_suite

__all__ = [
    "errors",
    "MAX_INTERVALS",
    "PerturbationCertificate",
    "c_fixed_diagonalize",
    "c_fixed_joint_diagonalize",
    "dual_exponent",
    "finite_spectrum_approx",
    "invertible_approx",
    "invertible_path",
    "wvn_diagonalize",
    "wvn_perturbation",
    "Conjugation",
    "conjugation_from_unitary",
    "conjugation_path",
    "equivalence_unitary",
    "same_conjugation",
    "same_symmetry_class",
    "standard_conjugation",
    "PartialConjugation",
    "RefinedPolar",
    "TakagiFactors",
    "extend_partial_conjugation",
    "partial_conjugation",
    "polar_isometry",
    "refined_polar",
    "takagi",
    "SkewElement",
    "SymElement",
    "antisymmetric_element",
    "antisymmetry_residual",
    "coords",
    "doubling_conjugation",
    "doubling_embedding",
    "from_coords",
    "is_antisymmetric",
    "is_symmetric",
    "jordan_product",
    "roberts_orthogonal",
    "schatten_norm",
    "skew_basis",
    "skew_part",
    "sym_basis",
    "sym_part",
    "symmetric_element",
    "symmetrized_rank_one",
    "symmetry_residual",
    "trace_norm_witness",
    "trace_pair",
    "transpose_map",
    "conjugation_to_doc",
    "doc_to_conjugation",
    "doc_to_element",
    "doc_to_matrix",
    "element_to_doc",
    "load_conjugation",
    "load_element",
    "load_matrix",
    "load_report",
    "matrix_to_doc",
    "save_conjugation",
    "save_element",
    "save_matrix",
    "save_report",
    "JordanMultiplier",
    "MultiplierNormReport",
    "multiplier_kernel",
    "multiplier_matrix",
    "multiplier_norm_report",
    "multiplier_spectrum",
    "skew_multiplier_matrix",
    "solve_sylvester",
    "ginibre",
    "haar_unitary",
    "random_conjugation",
    "random_orthogonal",
    "random_selfadjoint",
    "random_skew",
    "random_symmetric",
    "random_unit_vector",
    "stream",
    "AutomorphismReport",
    "NormalityReport",
    "automorphism_report",
    "generation_dimension",
    "irreducibility_check",
    "jordan_simplicity_witness",
    "normality_report",
    "DEFAULT_CHECKS",
    "SuiteConfig",
    "check_names",
    "run_suite",
]
