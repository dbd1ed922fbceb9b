"""Scheme evaluation, oracles and verification suites."""

from plinear.engine.evaluator import (
    EvaluationTrace,
    base_p_digits,
    eval_ct,
    eval_digit_scheme,
    eval_rat,
    eval_rat_diagonal,
    evaluate,
    parse_index,
)
from plinear.engine.oracles import (
    constant_term_table,
    ct_oracle,
    ct_state_vectors,
    series_coefficients,
    series_inverse,
    series_oracle,
    state_vector_oracle,
)
from plinear.engine.reports import Failure, VerificationReport
from plinear.engine.sequences import (
    DigitScheme,
    apery_numbers,
    apery_prime,
    catalogue_polynomial,
    gessel_scheme_matrices,
    power_of_two_scheme,
    power_of_two_scheme_mod,
    sequence_values,
)
from plinear.engine.verification import (
    gessel_check,
    lucas_check,
    multilinear_lucas_check,
    power_of_two_check,
    two_state_power_check,
    verify_cartier_identity,
    verify_hasse_witt,
    verify_scheme,
)

__all__ = [
    "DigitScheme",
    "EvaluationTrace",
    "Failure",
    "VerificationReport",
    "apery_numbers",
    "apery_prime",
    "base_p_digits",
    "catalogue_polynomial",
    "constant_term_table",
    "ct_oracle",
    "ct_state_vectors",
    "eval_ct",
    "eval_digit_scheme",
    "eval_rat",
    "eval_rat_diagonal",
    "evaluate",
    "gessel_check",
    "gessel_scheme_matrices",
    "lucas_check",
    "multilinear_lucas_check",
    "parse_index",
    "power_of_two_check",
    "power_of_two_scheme",
    "power_of_two_scheme_mod",
    "sequence_values",
    "series_coefficients",
    "series_inverse",
    "series_oracle",
    "state_vector_oracle",
    "two_state_power_check",
    "verify_cartier_identity",
    "verify_hasse_witt",
    "verify_scheme",
]
