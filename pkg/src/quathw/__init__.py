"""Quaternion linear algebra through the complex adjoint embedding.

Core surface: quaternion scalars and matrices, standard eigenvalues,
diagonalization, optimal eigenvalue matching, Hoffman-Wielandt and
Hoffman-Wielandt-type inequality verification, and block companion
machinery for right quaternion matrix polynomials.
"""

from .config import DEFAULT_TOLERANCES, Tolerances
from .errors import (
    LengthMismatchError,
    MalformedPairingError,
    MatrixFileError,
    NoConvergenceError,
    NonFiniteError,
    NotDiagonalizableError,
    NotHermitianError,
    NotLinearError,
    NotNormalError,
    PairingFailureError,
    PreconditionViolatedError,
    QuathwError,
    ShapeMismatchError,
    SingularLeadingCoefficientError,
    SingularMatrixError,
    ZeroQuaternionError,
)
from .hw import (
    AssignmentResult,
    InequalityReport,
    NonStandardReport,
    assignment_cost,
    fold_conjugate_assignment,
    hw_check,
    hw_report,
    hw_type_check,
    min_cost_assignment,
    non_standard_counterexample,
)
from .qmatrix import (
    Diagonalization,
    QMatrix,
    StandardSpectrum,
    adjoint,
    condition_number,
    diagonalize,
    from_adjoint,
    frobenius_norm,
    inverse,
    is_diagonalizable,
    is_hermitian,
    is_invertible,
    is_normal,
    is_positive_definite,
    is_positive_semidefinite,
    is_unitary,
    spectral_norm,
    standard_eigenvalues,
)
from .qpoly import (
    BoundReport,
    CompanionDiagonalizability,
    CompanionMatrix,
    ComplexMatrixPolynomial,
    QMatrixPolynomial,
    SimilarityWitness,
    adjoint_polynomial,
    bound_check_commuting_disc,
    bound_check_doubly_stochastic,
    bound_check_unitary,
    companion,
    companion_similarity_witness,
    complex_companion,
    diagonalizable_companion_linear,
    diagonalizable_companion_quadratic_unitary,
    hw_type_poly,
    monicize,
    standard_eigenvalues_poly,
)
from .quaternion import (
    Quaternion,
    similar,
    similarity_witness,
    standard_representative,
)

__version__ = "0.1.0"

__all__ = [
    "AssignmentResult",
    "BoundReport",
    "CompanionDiagonalizability",
    "CompanionMatrix",
    "ComplexMatrixPolynomial",
    "DEFAULT_TOLERANCES",
    "Diagonalization",
    "InequalityReport",
    "LengthMismatchError",
    "MalformedPairingError",
    "MatrixFileError",
    "NoConvergenceError",
    "NonFiniteError",
    "NonStandardReport",
    "NotDiagonalizableError",
    "NotHermitianError",
    "NotLinearError",
    "NotNormalError",
    "PairingFailureError",
    "PreconditionViolatedError",
    "QMatrix",
    "QMatrixPolynomial",
    "QuathwError",
    "Quaternion",
    "ShapeMismatchError",
    "SimilarityWitness",
    "SingularLeadingCoefficientError",
    "SingularMatrixError",
    "StandardSpectrum",
    "Tolerances",
    "ZeroQuaternionError",
    "adjoint",
    "adjoint_polynomial",
    "assignment_cost",
    "bound_check_commuting_disc",
    "bound_check_doubly_stochastic",
    "bound_check_unitary",
    "companion",
    "companion_similarity_witness",
    "complex_companion",
    "condition_number",
    "diagonalizable_companion_linear",
    "diagonalizable_companion_quadratic_unitary",
    "diagonalize",
    "fold_conjugate_assignment",
    "from_adjoint",
    "frobenius_norm",
    "hw_check",
    "hw_report",
    "hw_type_check",
    "hw_type_poly",
    "inverse",
    "is_diagonalizable",
    "is_hermitian",
    "is_invertible",
    "is_normal",
    "is_positive_definite",
    "is_positive_semidefinite",
    "is_unitary",
    "min_cost_assignment",
    "monicize",
    "non_standard_counterexample",
    "similar",
    "similarity_witness",
    "spectral_norm",
    "standard_eigenvalues",
    "standard_eigenvalues_poly",
    "standard_representative",
]
