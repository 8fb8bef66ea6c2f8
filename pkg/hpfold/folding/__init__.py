from .fold import (
    Fold,
    ValidationReport,
    Violation,
    ViolationKind,
    drop_ends,
    fold_from_sites,
    require_valid,
    reverse_fold,
    sites,
    transform_fold,
    validate,
    walk,
)
from .scoring import Contact, contacts, induced_edge_sum, score, zero_set_edges, zero_sites
from .decode import (
    KEYBOARD_MOVES,
    DecodeConstraints,
    DecodeResult,
    compare_decodings,
    decode_catalog_entry,
    decode_keyboard_moves,
    keyboard_catalog,
    zeros_fill_cube,
)
from .fold_file import format_fold_text, parse_fold_text, read_fold_file, write_fold_file

__all__ = [
    "Fold",
    "ValidationReport",
    "Violation",
    "ViolationKind",
    "drop_ends",
    "fold_from_sites",
    "require_valid",
    "reverse_fold",
    "sites",
    "transform_fold",
    "validate",
    "walk",
    "Contact",
    "contacts",
    "induced_edge_sum",
    "score",
    "zero_set_edges",
    "zero_sites",
    "KEYBOARD_MOVES",
    "DecodeConstraints",
    "DecodeResult",
    "compare_decodings",
    "decode_catalog_entry",
    "decode_keyboard_moves",
    "keyboard_catalog",
    "zeros_fill_cube",
    "format_fold_text",
    "parse_fold_text",
    "read_fold_file",
    "write_fold_file",
]
