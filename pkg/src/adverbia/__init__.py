"""Feature lexicon and linearization engine for German adverbials."""

from .analytics import (
    CellSummary,
    ClassSummary,
    Mismatch,
    Verdict,
    diff_against_reference,
    load_class_reference,
    parse_reference,
    summarize,
    summarize_cell,
)
from .disambiguate import (
    CARRIES_FOCUS,
    FOLLOWS_NEGATION,
    IN_VORFELD,
    PREDICATIVE_POSITION,
    Cue,
    CueKind,
    complement_case,
    filter_by_context,
    graduated_by,
)
from .lexicon import (
    CLASS_MAX,
    CLASS_MIN,
    PP_ONLY_CLASSES,
    Case,
    Diagnostic,
    Direction,
    LexEntry,
    Lexicon,
    MacroGroup,
    ScopeCategory,
    entry_to_dict,
    load_extended_lexicon,
    load_sample_lexicon,
    parse_lexicon,
    serialize_lexicon,
    validate_entry,
)
from .linearize import (
    NEGATION_CLASS,
    AngabeSeq,
    OrderViolation,
    builtin_negation,
    check_focus,
    check_order,
    check_vorfeld,
    order_angaben,
    order_indices,
)
from .scope import (
    Attachment,
    ScopeParse,
    Token,
    TokenKind,
    attach,
    can_modify,
    candidate_targets,
    vorfeld_constituent,
)

__version__ = "0.1.0"

__all__ = [
    "AngabeSeq",
    "Attachment",
    "CARRIES_FOCUS",
    "CLASS_MAX",
    "CLASS_MIN",
    "Case",
    "CellSummary",
    "ClassSummary",
    "Cue",
    "CueKind",
    "Diagnostic",
    "Direction",
    "FOLLOWS_NEGATION",
    "IN_VORFELD",
    "LexEntry",
    "Lexicon",
    "MacroGroup",
    "Mismatch",
    "NEGATION_CLASS",
    "OrderViolation",
    "PP_ONLY_CLASSES",
    "PREDICATIVE_POSITION",
    "ScopeCategory",
    "ScopeParse",
    "Token",
    "TokenKind",
    "Verdict",
    "attach",
    "builtin_negation",
    "can_modify",
    "candidate_targets",
    "check_focus",
    "check_order",
    "check_vorfeld",
    "complement_case",
    "diff_against_reference",
    "entry_to_dict",
    "filter_by_context",
    "graduated_by",
    "load_class_reference",
    "load_extended_lexicon",
    "load_sample_lexicon",
    "order_angaben",
    "order_indices",
    "parse_lexicon",
    "parse_reference",
    "serialize_lexicon",
    "summarize",
    "summarize_cell",
    "validate_entry",
]
