"""Exact eigenstructure of polynomial matrices under rational changes
of variable: Smith forms, elementary divisors (finite and infinite),
minimal bases, the denominator-cleared substitution operator, and a
verifier for how all of it maps through a substitution."""

from .factorization import (
    Factorization,
    FactorizationLimitError,
    factor_irreducible,
    is_irreducible,
    squarefree_decompose,
)
from .fields import GF, QQ, FieldError, PrimeField, RationalField, field_from_name
from .poly import Poly, gcd_extended, poly_gcd, reversal, valuation
from .polymat import (
    PolyMatrix,
    determinant,
    determinantal_divisors,
    eval_matrix,
    is_unimodular,
    rank_fraction_field,
    reversal_matrix,
)
from .ratmap import (
    INFINITY,
    CharPoint,
    DegreeBoundReport,
    GroupedPreimage,
    PreimageSet,
    RationalMap,
    degree_bound,
    grouped_preimage,
    mobius_inverse,
    new_map,
    phi_matrix,
    phi_scalar,
    preimage_set,
    psi_dual,
)
from .smith import (
    ElementaryDivisorList,
    SmithDecomposition,
    elementary_divisors_finite,
    elementary_divisors_infinite,
    infinite_structure_at_grade,
    smith_form,
)
from .minbasis import (
    MinimalBasis,
    forney_check,
    left_kernel_minimal_basis,
    minimal_indices_oracle,
    right_kernel_minimal_basis,
    transform_minimal_basis,
)
from .eigstructure import (
    CompleteEigenstructure,
    RootPolynomial,
    TheoremReport,
    complete_eigenstructure,
    ker_at_point,
    maximal_root_polynomials,
    transform_root_polynomial,
    verify_mobius_roundtrip,
    verify_theorem,
)
from .parsing import ParseError, parse_poly, poly_to_str

__version__ = "0.1.0"

__all__ = [
    "CharPoint",
    "CompleteEigenstructure",
    "DegreeBoundReport",
    "ElementaryDivisorList",
    "Factorization",
    "FactorizationLimitError",
    "FieldError",
    "GF",
    "GroupedPreimage",
    "INFINITY",
    "MinimalBasis",
    "ParseError",
    "Poly",
    "PolyMatrix",
    "PreimageSet",
    "PrimeField",
    "QQ",
    "RationalField",
    "RationalMap",
    "RootPolynomial",
    "SmithDecomposition",
    "TheoremReport",
    "complete_eigenstructure",
    "degree_bound",
    "determinant",
    "determinantal_divisors",
    "elementary_divisors_finite",
    "elementary_divisors_infinite",
    "eval_matrix",
    "factor_irreducible",
    "field_from_name",
    "forney_check",
    "gcd_extended",
    "grouped_preimage",
    "infinite_structure_at_grade",
    "is_irreducible",
    "is_unimodular",
    "ker_at_point",
    "left_kernel_minimal_basis",
    "maximal_root_polynomials",
    "minimal_indices_oracle",
    "mobius_inverse",
    "new_map",
    "parse_poly",
    "phi_matrix",
    "phi_scalar",
    "poly_gcd",
    "poly_to_str",
    "preimage_set",
    "psi_dual",
    "rank_fraction_field",
    "reversal",
    "reversal_matrix",
    "right_kernel_minimal_basis",
    "smith_form",
    "squarefree_decompose",
    "transform_minimal_basis",
    "transform_root_polynomial",
    "valuation",
    "verify_mobius_roundtrip",
    "verify_theorem",
]
