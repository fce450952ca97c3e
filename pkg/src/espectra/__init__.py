"""Exact E-characteristic polynomials and eigen-spectra of symmetric tensors."""

import os as _os

if "ESPECTRA_THREADS" in _os.environ:
    # must land before numpy initializes its thread pools (imported below)
    for _var in ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS", "MKL_NUM_THREADS"):
        _os.environ.setdefault(_var, _os.environ["ESPECTRA_THREADS"])

__version__ = "0.1.0"

from .poly_core import (
    ExactScalar,
    GaussianRational,
    MultiPoly,
    NonHomogeneousError,
    SymmetricTensor,
    UniPoly,
    euler_check,
    evaluate,
    gradient,
    restrict_to_conic,
    tensor_from_json,
    tensor_to_json,
)
from .resultant_engine import (
    DenominatorSingularError,
    MacaulaySystem,
    MatrixTooLargeError,
    ParametricSystem,
    ResultantError,
    macaulay_resultant,
    parametric_resultant,
    sylvester_resultant,
)
from .echar import (
    DeficitCertificate,
    ECharPoly,
    UnsupportedDimensionError,
    e_char_poly,
    find_deficit_solution,
    generic_eigen_count,
    is_irregular,
    psi_degree_bound,
)
from .spectra import (
    EigenPair,
    FermatSpec,
    IsotropicRootError,
    RecoveryFailure,
    SpectrumResult,
    ZeroCoefficientError,
    aberth_roots,
    binary_eigenpairs,
    canonical_pair,
    eigen_residual,
    eigenpairs_from_charpoly,
    fermat_eigenpairs,
    fermat_modes,
    product_of_eigenvalues,
)
from .invariants import (
    BinaryInvariants,
    DegenerateRestrictionError,
    InvariantReport,
    MainTheoremReport,
    RatioMismatchError,
    binary_q_discriminant,
    constant_term_ratio,
    fermat_h_polynomial,
    gradient_resultant,
    invariant_report,
    ternary_q_discriminant_proxy,
    verify_main_theorem,
)
from .generators import (
    apply_rotation,
    fermat_spec,
    fermat_tensor,
    random_fermat_coeffs,
    random_rotation,
    random_tensor,
    tangent_tensor,
)

__all__ = [
    "ExactScalar",
    "GaussianRational",
    "MultiPoly",
    "NonHomogeneousError",
    "SymmetricTensor",
    "UniPoly",
    "euler_check",
    "evaluate",
    "gradient",
    "restrict_to_conic",
    "tensor_from_json",
    "tensor_to_json",
    "DenominatorSingularError",
    "MacaulaySystem",
    "MatrixTooLargeError",
    "ParametricSystem",
    "ResultantError",
    "macaulay_resultant",
    "parametric_resultant",
    "sylvester_resultant",
    "DeficitCertificate",
    "ECharPoly",
    "UnsupportedDimensionError",
    "e_char_poly",
    "find_deficit_solution",
    "generic_eigen_count",
    "is_irregular",
    "psi_degree_bound",
    "EigenPair",
    "FermatSpec",
    "IsotropicRootError",
    "RecoveryFailure",
    "SpectrumResult",
    "ZeroCoefficientError",
    "aberth_roots",
    "binary_eigenpairs",
    "canonical_pair",
    "eigen_residual",
    "eigenpairs_from_charpoly",
    "fermat_eigenpairs",
    "fermat_modes",
    "product_of_eigenvalues",
    "BinaryInvariants",
    "DegenerateRestrictionError",
    "InvariantReport",
    "MainTheoremReport",
    "RatioMismatchError",
    "binary_q_discriminant",
    "constant_term_ratio",
    "fermat_h_polynomial",
    "gradient_resultant",
    "invariant_report",
    "ternary_q_discriminant_proxy",
    "verify_main_theorem",
    "apply_rotation",
    "fermat_spec",
    "fermat_tensor",
    "random_fermat_coeffs",
    "random_rotation",
    "random_tensor",
    "tangent_tensor",
]
