"""Hyperbolic polynomials, Nuij operators and Garding Nuij sequences in exact arithmetic."""

from .hyperbolicity import (
    DirectionError,
    HyperbolicityVerdict,
    RejectionReason,
    SamplingConfig,
    Status,
    Witness,
    check_direction,
    cone_member,
    stable_shift_check,
    test_hyperbolic,
)
from .nuij import (
    CoeffSequence,
    OperatorWord,
    RestrictedSequence,
    apply_first_order,
    apply_word,
    bb_symbol,
    build_Pas,
    build_Qa,
    expand_word,
    gns_check,
    restrict_sequence,
    verify_symbol_identity,
)
from .parsing import ParseError, parse_poly
from .poly import (
    BiPoly,
    MultiPoly,
    UniPoly,
    add,
    bipoly_from_shift,
    evaluate,
    is_homogeneous,
    mul,
    partial_derivative,
    render,
    restrict_line,
)
from .realroot import all_roots_negative, count_real_roots, is_real_rooted, square_free_part, sturm_chain

__version__ = "0.1.0"

__all__ = [
    "add",
    "all_roots_negative",
    "apply_first_order",
    "apply_word",
    "bb_symbol",
    "BiPoly",
    "bipoly_from_shift",
    "build_Pas",
    "build_Qa",
    "check_direction",
    "CoeffSequence",
    "cone_member",
    "count_real_roots",
    "DirectionError",
    "evaluate",
    "expand_word",
    "gns_check",
    "HyperbolicityVerdict",
    "is_homogeneous",
    "is_real_rooted",
    "mul",
    "MultiPoly",
    "OperatorWord",
    "parse_poly",
    "ParseError",
    "partial_derivative",
    "RejectionReason",
    "render",
    "restrict_line",
    "restrict_sequence",
    "RestrictedSequence",
    "SamplingConfig",
    "square_free_part",
    "stable_shift_check",
    "Status",
    "sturm_chain",
    "test_hyperbolic",
    "UniPoly",
    "verify_symbol_identity",
    "Witness",
]
