"""Measurement-only quantum word acceptors and the algebraic membership test
for the class of languages they recognize with an isolated cut point."""

from .errors import FormatError, PatternError, ResourceLimitError
from .patterns import SubsequencePattern
from .quantum import (
    EPS,
    CutpointReport,
    DensityMatrix,
    MeasureOnlyAutomaton,
    Observable,
    WordCheck,
    acceptance_probability,
    cutpoint_params,
    down_projector,
    format_automaton,
    identity_observable,
    measure,
    parse_automaton,
    pattern_automaton,
    recognizes_with_cutpoint,
    up_projector,
    validate_observable,
)
from .automata import (
    Dfa,
    complement,
    equivalent,
    is_empty,
    is_literally_idempotent,
    is_partially_ordered,
    minimize,
    parse_dfa,
    pattern_dfa,
    product,
    serialize_dfa,
    sup_variation,
    sup_variation_witness,
    variation,
)
from .algebra import (
    FiniteMonoid,
    GreenReport,
    Transformation,
    compose,
    green_report,
    is_block_group,
    is_j_trivial,
    is_l_trivial,
    is_r_trivial,
    letters_idempotent,
    transition_monoid,
)
from .decision import (
    NOT_LI,
    NOT_PT,
    Diagnosis,
    VerificationReport,
    diagnose,
    is_piecewise_testable,
    monoid_oracle,
    random_dfa,
    random_partially_ordered_dfa,
    verify_construction,
)

__version__ = "0.1.0"

__all__ = [
    "EPS",
    "NOT_LI",
    "NOT_PT",
    "CutpointReport",
    "DensityMatrix",
    "Dfa",
    "Diagnosis",
    "FiniteMonoid",
    "FormatError",
    "GreenReport",
    "MeasureOnlyAutomaton",
    "Observable",
    "PatternError",
    "ResourceLimitError",
    "SubsequencePattern",
    "Transformation",
    "VerificationReport",
    "WordCheck",
    "acceptance_probability",
    "complement",
    "compose",
    "cutpoint_params",
    "diagnose",
    "down_projector",
    "equivalent",
    "format_automaton",
    "green_report",
    "identity_observable",
    "is_block_group",
    "is_empty",
    "is_j_trivial",
    "is_l_trivial",
    "is_literally_idempotent",
    "is_partially_ordered",
    "is_piecewise_testable",
    "is_r_trivial",
    "letters_idempotent",
    "measure",
    "minimize",
    "monoid_oracle",
    "parse_automaton",
    "parse_dfa",
    "pattern_automaton",
    "pattern_dfa",
    "product",
    "random_dfa",
    "random_partially_ordered_dfa",
    "recognizes_with_cutpoint",
    "serialize_dfa",
    "sup_variation",
    "sup_variation_witness",
    "transition_monoid",
    "up_projector",
    "validate_observable",
    "variation",
    "verify_construction",
]
