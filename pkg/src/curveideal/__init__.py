"""Generators of the vanishing ideal of a projective curve from sampled points.

The package computes, degree by degree, a vector-space basis of the
homogeneous vanishing ideal of a finite point sample, organized as a
border basis against a monomial complement; it can then strip the
border basis down to a minimal generating set, predict the degrees
where generators live for standard curve classes, and recover exact
rational coefficients from floating-point output.
"""

from .bounds import (
    PROFILE_CLASSES,
    CurveProfile,
    DegreeBound,
    ProfileError,
    class_divisor_degree,
    degree_bound,
    parametrization_degree_bound,
    predicted_complement_size,
    required_points,
)
from .engine import (
    BorderRun,
    IdealOracle,
    border_basis_approx,
    border_basis_with_complement,
    compute_basis_points,
    generators_at_degree,
    points_oracle,
)
from .formats import (
    InputFormatError,
    read_generators,
    read_parametrization,
    read_points,
    write_generators,
    write_parametrization,
    write_points,
)
from .minimize import (
    MinimizationReport,
    minimal_basis,
    minimal_basis_approx,
    minimal_basis_border,
)
from .monomials import (
    CANONICAL_ORDER,
    CapacityError,
    Complement,
    GeneratorSet,
    HomogeneousPolynomial,
    Monomial,
    MonomialSet,
    SupportError,
    border_monomials,
    coeffs,
    enumerate_monomials,
    expand_plus,
)
from .numeric_linalg import (
    DEFAULT_TOL,
    IllConditionedError,
    RankDecision,
    RankMismatchWarning,
    border_form,
    qrp,
    svd_nullspace,
)
from .points import (
    DuplicatePointError,
    DuplicatePointWarning,
    Point,
    PointSet,
    evaluation_matrix,
    normalize_point,
)
from .rational_linalg import ExactMatrix, RREResult, kernel_exact, rank, rre
from .recovery import (
    CoefficientFailure,
    RationalizationPolicy,
    RationalizationReport,
    ResidualReport,
    SubstitutionReport,
    rationalize,
    rationalize_generators,
    verify_by_substitution,
    verify_on_points,
)
from .sampling import (
    BivariatePolynomial,
    Parametrization,
    sample_exact_rational,
    sample_roots_of_unity,
)

__version__ = "0.1.0"

__all__ = [
    "BorderRun",
    "BivariatePolynomial",
    "CANONICAL_ORDER",
    "CapacityError",
    "CoefficientFailure",
    "Complement",
    "CurveProfile",
    "DEFAULT_TOL",
    "DegreeBound",
    "DuplicatePointError",
    "DuplicatePointWarning",
    "ExactMatrix",
    "GeneratorSet",
    "HomogeneousPolynomial",
    "IdealOracle",
    "IllConditionedError",
    "InputFormatError",
    "MinimizationReport",
    "Monomial",
    "MonomialSet",
    "PROFILE_CLASSES",
    "Parametrization",
    "Point",
    "PointSet",
    "ProfileError",
    "RREResult",
    "RankDecision",
    "RankMismatchWarning",
    "RationalizationPolicy",
    "RationalizationReport",
    "ResidualReport",
    "SubstitutionReport",
    "SupportError",
    "border_basis_approx",
    "border_basis_with_complement",
    "border_form",
    "border_monomials",
    "class_divisor_degree",
    "coeffs",
    "compute_basis_points",
    "degree_bound",
    "enumerate_monomials",
    "evaluation_matrix",
    "expand_plus",
    "generators_at_degree",
    "kernel_exact",
    "minimal_basis",
    "minimal_basis_approx",
    "minimal_basis_border",
    "normalize_point",
    "parametrization_degree_bound",
    "points_oracle",
    "predicted_complement_size",
    "qrp",
    "rank",
    "rationalize",
    "rationalize_generators",
    "read_generators",
    "read_parametrization",
    "read_points",
    "required_points",
    "rre",
    "sample_exact_rational",
    "sample_roots_of_unity",
    "svd_nullspace",
    "verify_by_substitution",
    "verify_on_points",
    "write_generators",
    "write_parametrization",
    "write_points",
]
