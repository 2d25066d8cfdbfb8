"""Automata with multiplicities over pluggable semirings.

Linear representations ``(lam, mu, gamma)`` with the rational laws (sum,
Cauchy product, star, scalar products), the dual laws (shuffle,
infiltration, Hadamard and the ``(epsilon, q)`` family), minimization over
fields, a Monte-Carlo minimality experiment, and shuffle-compatibility of
congruences.
"""

from .congruence import (
    RelatorClassification,
    RelatorSet,
    Verdict,
    automaton_compatible,
    classify_relators,
    congruence_class,
    hadamard_preserves_compatibility_check,
    parse_relators,
    predicted_compatibility,
    shuffle_compatible,
    tensor_congruent,
)
from .density import (
    DensityReport,
    Monomial,
    SAlphaN,
    SGeo,
    TN,
    TrialConfig,
    density_experiment,
    random_rep,
    tau_from_shifts,
)
from .dual import (
    AlphaTable,
    DualLawParams,
    alpha_associative,
    alpha_locally_finite,
    alpha_unital,
    coproduct_word,
    dual_law_poly,
    rep_dual_law,
    rep_hadamard,
    rep_infiltration,
    rep_shuffle,
)
from .errors import (
    CapabilityError,
    InvalidWordError,
    MismatchError,
    MultAutomataError,
    NotProperError,
    PreconditionError,
    UnsupportedRelatorError,
)
from .expression import compile_expression, format_expression, parse_expression
from .rational import rep_cauchy, rep_scale_left, rep_scale_right, rep_star, rep_sum
from .reduction import ReductionResult, equivalent, hankel_rank, left_reduce, minimize, rank, right_reduce
from .semiring import (
    BOOLEAN,
    INTEGER,
    MINUS_INF,
    NATURAL,
    RATIONAL,
    TROPICAL,
    Semiring,
    additive_monoid_parameters,
    one_plus_one_equals_one,
    semiring_from_tag,
    zmod,
)
from .serialize import dumps, export_dot, loads
from .series import (
    LinearRepresentation,
    SeriesPolynomial,
    TensorPolynomial,
    coefficient,
    constant_rep,
    is_proper,
    letter_rep,
    truncate,
    zero_rep,
)

__version__ = "0.1.0"

__all__ = [
    "RelatorClassification",
    "RelatorSet",
    "Verdict",
    "automaton_compatible",
    "classify_relators",
    "congruence_class",
    "hadamard_preserves_compatibility_check",
    "parse_relators",
    "predicted_compatibility",
    "shuffle_compatible",
    "tensor_congruent",
    "DensityReport",
    "Monomial",
    "SAlphaN",
    "SGeo",
    "TN",
    "TrialConfig",
    "density_experiment",
    "random_rep",
    "tau_from_shifts",
    "AlphaTable",
    "DualLawParams",
    "alpha_associative",
    "alpha_locally_finite",
    "alpha_unital",
    "coproduct_word",
    "dual_law_poly",
    "rep_dual_law",
    "rep_hadamard",
    "rep_infiltration",
    "rep_shuffle",
    "CapabilityError",
    "InvalidWordError",
    "MismatchError",
    "MultAutomataError",
    "NotProperError",
    "PreconditionError",
    "UnsupportedRelatorError",
    "BOOLEAN",
    "INTEGER",
    "MINUS_INF",
    "NATURAL",
    "RATIONAL",
    "TROPICAL",
    "Semiring",
    "additive_monoid_parameters",
    "one_plus_one_equals_one",
    "semiring_from_tag",
    "zmod",
    "LinearRepresentation",
    "SeriesPolynomial",
    "TensorPolynomial",
    "coefficient",
    "constant_rep",
    "is_proper",
    "letter_rep",
    "truncate",
    "zero_rep",
    "compile_expression",
    "format_expression",
    "parse_expression",
    "rep_cauchy",
    "rep_scale_left",
    "rep_scale_right",
    "rep_star",
    "rep_sum",
    "ReductionResult",
    "equivalent",
    "hankel_rank",
    "left_reduce",
    "minimize",
    "rank",
    "right_reduce",
    "dumps",
    "export_dot",
    "loads",
]
