"""Exact integration of 1/(z(z-a_1)...(z-a_q)) as a formal series at infinity.

The package computes the antiderivative of 1/Q two independent ways (a
root-free expansion and a partial-fraction log-series sum) over exact
rational arithmetic, verifies the Vandermonde and symmetric-function
identities its coefficients satisfy, and demonstrates the shrinking-root
limit toward -1/(q z^q).
"""

from .asymptotics import (
    ChargeSystem,
    ScaleRow,
    ScalingReport,
    potential,
    scaling_limit_table,
)
from .integrate import (
    IntegralResult,
    MomentIdentityReport,
    MomentIdentityRow,
    PartialFractions,
    RootConfig,
    ValuationCheck,
    check_moment_identities,
    closed_form_coefficient,
    integrate_via_expansion,
    integrate_via_partial_fractions,
    moment,
    partial_fractions,
    valuation_check,
)
from .parser import (
    PolyParseError,
    format_rational,
    parse_factored_denominator,
    parse_poly,
    parse_rational,
)
from .polynomial import Poly, Rat, gcd, is_squarefree
from .series import INFINITY, InvZSeries, NotIntegrableInRing
from .symmetric import (
    SymmetricTable,
    complete_homogeneous,
    complete_homogeneous_direct,
    determinant,
    determinant_bareiss,
    determinant_cofactor,
    elementary_symmetric,
    generalized_vandermonde,
    vandermonde_matrix,
    vandermonde_product,
)

__version__ = "0.1.0"

__all__ = [
    "ChargeSystem",
    "INFINITY",
    "IntegralResult",
    "InvZSeries",
    "MomentIdentityReport",
    "MomentIdentityRow",
    "NotIntegrableInRing",
    "PartialFractions",
    "Poly",
    "PolyParseError",
    "Rat",
    "RootConfig",
    "ScaleRow",
    "ScalingReport",
    "SymmetricTable",
    "ValuationCheck",
    "check_moment_identities",
    "closed_form_coefficient",
    "complete_homogeneous",
    "complete_homogeneous_direct",
    "determinant",
    "determinant_bareiss",
    "determinant_cofactor",
    "elementary_symmetric",
    "format_rational",
    "gcd",
    "generalized_vandermonde",
    "integrate_via_expansion",
    "integrate_via_partial_fractions",
    "is_squarefree",
    "moment",
    "parse_factored_denominator",
    "parse_poly",
    "parse_rational",
    "partial_fractions",
    "potential",
    "scaling_limit_table",
    "vandermonde_matrix",
    "vandermonde_product",
    "valuation_check",
]
