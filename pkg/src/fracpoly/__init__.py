"""fracpoly: generalized Bernoulli/Euler/Genocchi polynomial families under
fractional calculus, with exact rational arithmetic where the mathematics is
exact and explicit-precision floats where it is not.

The package constructs the three polynomial families generated by dividing
small numerators by lambda * E_alpha(z) -+ 1 (E_alpha the Mittag-Leffler
function), applies Caputo derivatives and Riemann-Liouville integrals to
them, and machine-verifies the identities these objects satisfy, including
their closed-form fractional derivatives, against an independent singular
quadrature oracle.  The ``fracpoly`` CLI exposes tables, evaluation and the
verification suites.
"""

from .errors import (
    CompositionMismatch,
    ConvergenceEnvelopeExceeded,
    DegenerateDenominator,
    DegreeTooLow,
    DomainError,
    FracPolyError,
    IndexOutOfOrder,
    OrderMismatch,
    PoleError,
    ToleranceUnreachable,
    ValuationError,
    ZeroConstantTerm,
    ZeroSeries,
)
from .scalars import DEFAULT_PRECISION, Scalar, as_scalar, working_precision
from .gammafns import (
    GammaValue,
    beta,
    binomial,
    gamma,
    gamma_value,
    generalized_binomial,
    multinomial,
    reciprocal_gamma,
)
from .series import (
    TruncatedSeries,
    cauchy_product,
    divide_with_valuation,
    egf_coefficient,
    multiply_exp,
    reciprocal,
    series_add,
)
from .mittag import MLParams, ml_eval, ml_one_m_closed, ml_series
from .families import (
    FamilyKind,
    FamilyParams,
    Polynomial,
    eval_polynomial,
    family_numbers,
    family_polynomial,
    higher_order_numbers,
    integral_over_unit_interval,
    multinomial_number_product,
    poly_derivative,
)
from .fractional import (
    CaputoOrder,
    FracExpansion,
    FracTerm,
    caputo_apostol_bernoulli,
    caputo_apostol_bernoulli_higher,
    caputo_derivative_poly,
    caputo_family_poly,
    caputo_power_rule,
    caputo_quadrature_oracle,
    composition_check,
    eval_frac_expansion,
    leibniz_product,
    rl_derivative_term,
    rl_integral_poly,
)
from .verify import RunConfig, VerificationReport, run_suite, run_suites

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_PRECISION",
    "Scalar",
    "as_scalar",
    "working_precision",
    "gamma",
    "gamma_value",
    "GammaValue",
    "reciprocal_gamma",
    "beta",
    "binomial",
    "generalized_binomial",
    "multinomial",
    "TruncatedSeries",
    "series_add",
    "cauchy_product",
    "reciprocal",
    "divide_with_valuation",
    "multiply_exp",
    "egf_coefficient",
    "MLParams",
    "ml_series",
    "ml_eval",
    "ml_one_m_closed",
    "FamilyKind",
    "FamilyParams",
    "Polynomial",
    "family_numbers",
    "family_polynomial",
    "eval_polynomial",
    "poly_derivative",
    "integral_over_unit_interval",
    "higher_order_numbers",
    "multinomial_number_product",
    "CaputoOrder",
    "FracTerm",
    "FracExpansion",
    "caputo_power_rule",
    "caputo_derivative_poly",
    "rl_integral_poly",
    "rl_derivative_term",
    "composition_check",
    "leibniz_product",
    "caputo_apostol_bernoulli",
    "caputo_apostol_bernoulli_higher",
    "caputo_family_poly",
    "caputo_quadrature_oracle",
    "eval_frac_expansion",
    "RunConfig",
    "VerificationReport",
    "run_suite",
    "run_suites",
    "FracPolyError",
    "DomainError",
    "PoleError",
    "OrderMismatch",
    "ZeroConstantTerm",
    "ZeroSeries",
    "ValuationError",
    "IndexOutOfOrder",
    "DegenerateDenominator",
    "ConvergenceEnvelopeExceeded",
    "ToleranceUnreachable",
    "DegreeTooLow",
    "CompositionMismatch",
]
