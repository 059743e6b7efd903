"""Exact computation of associated forms of polynomials and polynomial tuples."""

from .apolarity import (
    ApolarSlice,
    NotApplicable,
    annihilator_graded,
    apolar_tuple,
    in_U,
    inverse_system_check,
    same_span,
)
from .duality import (
    INFINITY,
    Family,
    FamilyPoint,
    InvolutionStatus,
    family_form,
    involution_check,
    j_transform_check,
    mobius,
    orbit_duality_check,
    proportional,
)
from .errors import (
    AssoformError,
    DegenerateFamilyError,
    DegenerateFrameError,
    DegenerateQuinticError,
    DegreeMismatchError,
    ExcludedParameterError,
    FamilyConversionError,
    FiniteColengthError,
    InputError,
    NondegeneracyError,
    PolyParseError,
    SingularMatrixError,
    VanishingInvariantError,
)
from .invariants import (
    QuarticCoeffs,
    QuinticCovariants,
    SylvesterQuintic,
    TernaryCubicFamily,
    a6_family,
    aronhold_a4,
    catalecticant,
    delta_cubic_family,
    delta_quartic,
    hat,
    i2_quartic,
    j_cubic_family,
    j_quartic,
    k_cubic,
    k_quartic,
    pippian,
    quintic_covariants,
    quippian,
    verify_cubic_identity,
    verify_quartic_identity,
    verify_quintic_identity,
    verify_quintic_relation,
)
from .linalg import MatrixQ
from .milnor import (
    AssociatedForm,
    PolyTuple,
    SocleFunctional,
    associated_form,
    associated_form_tuple,
    gradient,
    hilbert_function,
    ideal_graded_dim,
    is_finite_colength,
    is_nondegenerate,
    socle_functional,
)
from .poly import (
    ActionKind,
    Poly,
    Space,
    act,
    diamond,
    hessian,
    jacobian,
    monomial_basis,
    parse_poly,
    render_poly,
)
from .suites import run_suite

__all__ = [
    "INFINITY",
    "ActionKind",
    "ApolarSlice",
    "AssociatedForm",
    "AssoformError",
    "DegenerateFamilyError",
    "DegenerateFrameError",
    "DegenerateQuinticError",
    "DegreeMismatchError",
    "ExcludedParameterError",
    "Family",
    "FamilyConversionError",
    "FamilyPoint",
    "FiniteColengthError",
    "InputError",
    "InvolutionStatus",
    "MatrixQ",
    "NondegeneracyError",
    "NotApplicable",
    "Poly",
    "PolyParseError",
    "PolyTuple",
    "QuarticCoeffs",
    "QuinticCovariants",
    "SingularMatrixError",
    "SocleFunctional",
    "Space",
    "SylvesterQuintic",
    "TernaryCubicFamily",
    "VanishingInvariantError",
    "a6_family",
    "act",
    "annihilator_graded",
    "apolar_tuple",
    "aronhold_a4",
    "associated_form",
    "associated_form_tuple",
    "catalecticant",
    "delta_cubic_family",
    "delta_quartic",
    "diamond",
    "family_form",
    "gradient",
    "hat",
    "hessian",
    "hilbert_function",
    "i2_quartic",
    "ideal_graded_dim",
    "in_U",
    "inverse_system_check",
    "involution_check",
    "is_finite_colength",
    "is_nondegenerate",
    "j_cubic_family",
    "j_quartic",
    "j_transform_check",
    "jacobian",
    "k_cubic",
    "k_quartic",
    "mobius",
    "monomial_basis",
    "orbit_duality_check",
    "parse_poly",
    "pippian",
    "proportional",
    "quintic_covariants",
    "quippian",
    "render_poly",
    "run_suite",
    "same_span",
    "socle_functional",
    "verify_cubic_identity",
    "verify_quartic_identity",
    "verify_quintic_identity",
    "verify_quintic_relation",
]
