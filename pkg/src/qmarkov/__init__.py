"""q-deformed Markov numbers computed three independent ways, in exact arithmetic."""
from .cluster import TriPoly, conjecture_check, hat_a, hat_b, hat_cohn
from .cohn import (
    QMatrix2,
    cohn_a,
    cohn_b,
    cohn_matrix,
    entry_relations_check,
    extended_tree_identity,
    generators_q,
    q_markov_via_trace,
    tilde_q_markov,
)
from .errors import (
    EmptySupportError,
    MalformedInputError,
    NonDivisibleError,
    NotNeighborsError,
    OracleBoundExceededError,
    QMarkovError,
    UnsupportedLabelError,
)
from .farey import (
    ChristoffelWord,
    FareyRational,
    christoffel_word,
    mediant,
    recode_ab,
    stern_brocot_path,
)
from .laurent import (
    LaurentPoly,
    eval_at_one,
    exact_div,
    is_monic_palindromic_positive,
    is_palindromic,
    is_unimodal,
    q_int,
)
from .mutation import QMarkovTriple, mutate, q_markov_number, recover_label, verify_equation
from .snake import (
    SnakeGraph,
    build_snake,
    build_tilde_snake,
    enumerate_matchings,
    export_dot,
    mu_labels,
    weighted_match_count_bruteforce,
    weighted_match_count_transfer,
)

__version__ = "0.1.0"

__all__ = [
    "TriPoly",
    "conjecture_check",
    "hat_a",
    "hat_b",
    "hat_cohn",
    "QMatrix2",
    "cohn_a",
    "cohn_b",
    "cohn_matrix",
    "entry_relations_check",
    "extended_tree_identity",
    "generators_q",
    "q_markov_via_trace",
    "tilde_q_markov",
    "EmptySupportError",
    "MalformedInputError",
    "NonDivisibleError",
    "NotNeighborsError",
    "OracleBoundExceededError",
    "QMarkovError",
    "UnsupportedLabelError",
    "ChristoffelWord",
    "FareyRational",
    "christoffel_word",
    "mediant",
    "recode_ab",
    "stern_brocot_path",
    "LaurentPoly",
    "eval_at_one",
    "exact_div",
    "is_monic_palindromic_positive",
    "is_palindromic",
    "is_unimodal",
    "q_int",
    "QMarkovTriple",
    "mutate",
    "q_markov_number",
    "recover_label",
    "verify_equation",
    "SnakeGraph",
    "build_snake",
    "build_tilde_snake",
    "enumerate_matchings",
    "export_dot",
    "mu_labels",
    "weighted_match_count_bruteforce",
    "weighted_match_count_transfer",
]
