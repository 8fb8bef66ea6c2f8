from .word import Word, ALPHABET, CYCLIC_PREFIX
from .ops import internal_zero_capacity, occurrences, reverse, zeros
from .families import (
    Construction,
    berger_leighton_fold,
    hex_family,
    hex_family_fold,
    multiset_M,
    rect_family,
    special_words,
    square_construction,
    tri_family,
    tri_family_fold,
    whiskers_eta,
    whiskers_zeta,
)

__all__ = [
    "Word",
    "ALPHABET",
    "CYCLIC_PREFIX",
    "internal_zero_capacity",
    "occurrences",
    "reverse",
    "zeros",
    "Construction",
    "berger_leighton_fold",
    "hex_family",
    "hex_family_fold",
    "multiset_M",
    "rect_family",
    "special_words",
    "square_construction",
    "tri_family",
    "tri_family_fold",
    "whiskers_eta",
    "whiskers_zeta",
]
