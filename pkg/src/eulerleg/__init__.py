"""Legendre polynomials through Euler's representations, cross-verified."""

from .errors import ConsistencyError, DomainError, NewtonDidNotConverge, ToleranceNotReached
from .exactcore import Rational, RationalPolynomial, binomial_general, poly_add, poly_eval, poly_mul
from .hypergeom import HypergeometricParams, euler_transform_residual, hyp2f1
from .integrals import (
    AFamilyPoint,
    E606Params,
    a_family_difference_residual,
    a_family_direct,
    a_family_explicit,
    a_family_functional_residual,
    e606_G_mod,
    e606_legendre,
    e606_recurrence_residual,
    jacobi_relation_residual,
    laplace_negative,
    laplace_positive,
)
from .quadrature import (
    QuadratureRule,
    RuleKind,
    gauss_chebyshev_rule,
    gauss_legendre_rule,
    integrate_to_tolerance,
)
from .recurrence import (
    PrimitiveSolveResult,
    legendre_eval,
    legendre_eval_with_derivative,
    legendre_poly,
    primitive_solve,
)
from .trinomial import (
    TrinomialParams,
    central_coeff,
    gf_coefficients,
    legendre_via_trinomial,
    section22_residual,
)

__version__ = "0.1.0"
