"""Transducer analysis and radix-order splitting of rational relations."""

from .discrepancy import (
    DiscrepancyProfile,
    Witness,
    ZeroAvoidanceReport,
    is_zero_avoiding,
    minimum_bound,
    pair_discrepancy,
    path_profile,
)
from .errors import (
    AlphabetMismatch,
    BoundTooSmall,
    CapMismatch,
    EmptyInitialSet,
    HasEpsilonPair,
    InvalidSymbol,
    NotAPath,
    NotInputAltering,
    NotLetterToLetter,
    NotZeroAvoiding,
    ParseError,
    RelsplitError,
    ShapeViolation,
)
from .machine import (
    Edge,
    Transducer,
    check_path,
    concat,
    empty_machine,
    inverse,
    is_letter_to_letter,
    is_path,
    path_label,
    remove_epsilon_pairs,
    trim,
    union,
)
from .oracle import (
    BoundedRelation,
    check_partition,
    check_properties,
    enumerate_pairs,
    filter_order,
    inverse_relation,
)
from .orders import lex_less, radix_less
from .partition import (
    PartitionResult,
    base_path,
    build_greater,
    build_greater_ltl,
    copy_count,
    is_input_altering,
    partition,
)
from .textio import parse, serialize, to_dot

__version__ = "0.1.0"

__all__ = [
    "AlphabetMismatch",
    "BoundTooSmall",
    "BoundedRelation",
    "CapMismatch",
    "DiscrepancyProfile",
    "Edge",
    "EmptyInitialSet",
    "HasEpsilonPair",
    "InvalidSymbol",
    "NotAPath",
    "NotInputAltering",
    "NotLetterToLetter",
    "NotZeroAvoiding",
    "ParseError",
    "PartitionResult",
    "RelsplitError",
    "ShapeViolation",
    "Transducer",
    "Witness",
    "ZeroAvoidanceReport",
    "base_path",
    "build_greater",
    "build_greater_ltl",
    "check_partition",
    "check_path",
    "check_properties",
    "concat",
    "copy_count",
    "empty_machine",
    "enumerate_pairs",
    "filter_order",
    "inverse",
    "inverse_relation",
    "is_input_altering",
    "is_letter_to_letter",
    "is_path",
    "is_zero_avoiding",
    "lex_less",
    "minimum_bound",
    "pair_discrepancy",
    "parse",
    "partition",
    "path_label",
    "path_profile",
    "radix_less",
    "remove_epsilon_pairs",
    "serialize",
    "to_dot",
    "trim",
    "union",
]
