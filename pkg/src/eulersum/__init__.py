"""Binomial (Euler) averages, convolution summation methods, weighted means.

The library is dual-mode throughout: exact arbitrary-precision rational
arithmetic for identity verification, IEEE double arithmetic for long sweeps
and convergence experiments.  See the README for a tour and the ``demos/``
scripts for narrative walkthroughs of each capability.
"""

__version__ = "0.1.0"

from .binomial import (
    BinomialRow,
    SupBoundReport,
    binomial_average,
    binomial_sweep,
    check_k_step_expansion,
    check_one_step_recurrence,
    check_sup_bound,
    iter_weight_rows,
    weight_sum_drift,
    weights_row,
)
from .convolution import (
    FiniteSupport,
    GeometricTail,
    RatioTelescoping,
    WeightProfile,
    abs_sum,
    convolve_at,
    correct_rhs,
    incorrect_rhs,
    parse_profile,
    total_sum,
)
from .errors import (
    DomainError,
    EulersumError,
    ModeMismatchError,
    NonConvergenceError,
    ParseError,
)
from .identities import (
    IdentityReport,
    StarViolation,
    alternating_sum,
    alternating_sum_via_negation,
    chu_vandermonde_check,
    find_star_violation,
    iter_star_star_rows,
    star_star_rhs,
    verify_star_star,
)
from .limits import (
    LimitEstimate,
    MainTheoremReport,
    RIndependenceReport,
    ShiftInvarianceReport,
    WeightedCompositionReport,
    estimate_limit,
    run_main_theorem_experiment,
    run_r_independence_experiment,
    run_shift_invariance_experiment,
    run_weighted_composition_experiment,
)
from .scalars import (
    ComplexScalar,
    Mode,
    Real,
    binomial_coefficient,
    format_real,
    format_scalar,
    generalized_binomial,
    parse_rational,
    parse_real,
    parse_scalar,
)
from .sequences import (
    Constant,
    Convolved,
    Geometric,
    Periodic,
    Scale,
    SequenceSpec,
    ShiftLeft,
    ShiftRight,
    Sum,
    Tabulated,
    evaluate,
    from_file,
    parse_sequence,
    prefix,
)
from .weighted import (
    LinearWeight,
    PolynomialWeight,
    PowerWeight,
    RatioPowerReport,
    TableWeight,
    WeightFunction,
    equivalence_residual,
    lambda_profile_of,
    parse_weight_function,
    ratio_limit,
    ratio_power_check,
    weighted_average,
)

__all__ = [
    "__version__",
    # scalars
    "ComplexScalar",
    "Mode",
    "Real",
    "binomial_coefficient",
    "generalized_binomial",
    "parse_rational",
    "parse_real",
    "parse_scalar",
    "format_real",
    "format_scalar",
    # errors
    "EulersumError",
    "ModeMismatchError",
    "DomainError",
    "ParseError",
    "NonConvergenceError",
    # sequences
    "SequenceSpec",
    "Constant",
    "Geometric",
    "Periodic",
    "Tabulated",
    "ShiftRight",
    "ShiftLeft",
    "Scale",
    "Sum",
    "Convolved",
    "from_file",
    "evaluate",
    "prefix",
    "parse_sequence",
    # convolution
    "WeightProfile",
    "FiniteSupport",
    "GeometricTail",
    "RatioTelescoping",
    "convolve_at",
    "total_sum",
    "abs_sum",
    "correct_rhs",
    "incorrect_rhs",
    "parse_profile",
    # binomial transform
    "BinomialRow",
    "weights_row",
    "iter_weight_rows",
    "binomial_average",
    "binomial_sweep",
    "weight_sum_drift",
    "check_one_step_recurrence",
    "check_k_step_expansion",
    "check_sup_bound",
    "SupBoundReport",
    # weighted averages
    "WeightFunction",
    "PowerWeight",
    "LinearWeight",
    "PolynomialWeight",
    "TableWeight",
    "weighted_average",
    "ratio_limit",
    "lambda_profile_of",
    "equivalence_residual",
    "ratio_power_check",
    "RatioPowerReport",
    "parse_weight_function",
    # identities
    "alternating_sum",
    "alternating_sum_via_negation",
    "star_star_rhs",
    "verify_star_star",
    "find_star_violation",
    "chu_vandermonde_check",
    "iter_star_star_rows",
    "IdentityReport",
    "StarViolation",
    # limits and experiments
    "LimitEstimate",
    "estimate_limit",
    "run_main_theorem_experiment",
    "run_shift_invariance_experiment",
    "run_r_independence_experiment",
    "run_weighted_composition_experiment",
    "MainTheoremReport",
    "ShiftInvarianceReport",
    "RIndependenceReport",
    "WeightedCompositionReport",
]
