"""Final-digits orders and topologies on the naturals, integers and rationals.

The package provides exact comparators for three digit-defined orders, a
symbolic algebra of basic open sets and derived topologies, checkable
continuity and discontinuity certificates for arithmetic, and an explicit
back-and-forth isomorphism between the final-digits order and the rationals.
"""

from .continuity import (
    ContinuityWitness,
    DiscontinuityWitness,
    Justification,
    NoWitnessUpTo,
    modulus_residue,
    probe_continuity,
    probe_order_topology,
    refute_restrict17,
    refute_variant_successor,
    witness_blend,
    witness_final_digits,
    witness_for,
    witness_segment,
    witness_translate,
    witness_union,
)
from .embedding import (
    BackAndForthState,
    ba_step,
    embed,
    embedding_table,
    inverse,
    rational_at,
    rational_index,
    transported_add,
    transported_mul,
    witness_pairing,
)
from .errors import (
    BudgetExceededError,
    CarrierMismatchError,
    EmptyIntervalError,
    NotationError,
    PreconditionError,
    TopoArithError,
    UnderflowError,
    UndefinedValuationError,
    UnsupportedFormatError,
    UnsupportedSpecError,
)
from .kernels import IMPLEMENTATION
from .notation import format_open, format_topology, parse_open, parse_topology
from .numerals import DigitString, Numeral, Sign, SignedNumeral, metric2, suffix, trailing_digits, v2
from .orders import (
    OrderKind,
    Ordering,
    between,
    compare,
    fd_cmp,
    least_in_interval,
    rank3,
    rankv,
    ranks,
    signed_cmp,
    unbounded_witnesses,
    variant_cmp,
)
from .pairing import pair_cantor, pair_double, unpair_cantor, unpair_double
from .render import RenderSpec, render_order
from .topology import basic_nbhd, intersect_suffix, is_isolated, member, suffix_class_as_right_open
from .verify import run_probe, run_suite

__version__ = "0.1.0"

__all__ = [
    "IMPLEMENTATION",
    "BackAndForthState",
    "BudgetExceededError",
    "CarrierMismatchError",
    "ContinuityWitness",
    "DigitString",
    "DiscontinuityWitness",
    "EmptyIntervalError",
    "Justification",
    "NoWitnessUpTo",
    "NotationError",
    "Numeral",
    "OrderKind",
    "Ordering",
    "PreconditionError",
    "RenderSpec",
    "Sign",
    "SignedNumeral",
    "TopoArithError",
    "UnderflowError",
    "UndefinedValuationError",
    "UnsupportedFormatError",
    "UnsupportedSpecError",
    "ba_step",
    "basic_nbhd",
    "between",
    "compare",
    "embed",
    "embedding_table",
    "fd_cmp",
    "format_open",
    "format_topology",
    "intersect_suffix",
    "inverse",
    "is_isolated",
    "least_in_interval",
    "member",
    "metric2",
    "modulus_residue",
    "pair_cantor",
    "pair_double",
    "parse_open",
    "parse_topology",
    "probe_continuity",
    "probe_order_topology",
    "rank3",
    "rankv",
    "ranks",
    "rational_at",
    "rational_index",
    "refute_restrict17",
    "refute_variant_successor",
    "render_order",
    "run_probe",
    "run_suite",
    "signed_cmp",
    "suffix",
    "suffix_class_as_right_open",
    "trailing_digits",
    "transported_add",
    "transported_mul",
    "unbounded_witnesses",
    "unpair_cantor",
    "unpair_double",
    "v2",
    "variant_cmp",
    "witness_blend",
    "witness_final_digits",
    "witness_for",
    "witness_pairing",
    "witness_segment",
    "witness_translate",
    "witness_union",
]
