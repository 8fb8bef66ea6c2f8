"""
Upper bounds on the optimal score J of a {0,1} word.

rect2d and hex use the zero-count bounds; rect3d and tri use the handshake
bound, which is valid on every lattice.
"""
import logging
from typing import Tuple

from hpfold.errors import InputError
from hpfold.lattice import LatticeKind
from hpfold.words import Word, internal_zero_capacity, zeros

logger = logging.getLogger(__name__)

RECT2D_BOUND = "rect2d-zeros"
HEX_BOUND = "hex-half-zeros"
GENERIC_BOUND = "generic-handshake"


def _require_binary(w: Word) -> None:
    if w.has_level_two():
        raise InputError("Bounds are defined for words over {0,1}; letter 2 belongs to the multichain model")


def handshake_bound(kind, w: Word, wrapped: bool = False) -> int:
    """
    Half the total free-direction count of the zeros: every contact uses one
    free direction at each of its two zeros.
    """
    _require_binary(w)
    return sum(internal_zero_capacity(kind, w, wrapped=wrapped)) // 2


def bound_name(kind, wrapped: bool = False) -> str:
    kind = LatticeKind(kind)
    if kind == LatticeKind.RECT2D:
        return RECT2D_BOUND
    if kind == LatticeKind.HEX:
        return HEX_BOUND
    return GENERIC_BOUND


def upper_bound(kind, w: Word, wrapped: bool = False) -> int:
    """
    Bound J(w), or J(1w1) when wrapped is set.

    Args:
        kind: lattice
        w: word over {0,1}; a cyclic word is bounded as if wrapped
        wrapped: bound the word 1w1 instead of w

    Returns:
        rect2d Z or Z+1, hex floor(Z/2) or floor(Z/2)+1, otherwise the handshake bound
    """
    _require_binary(w)
    kind = LatticeKind(kind)
    wrapped = wrapped or w.cyclic
    z = zeros(w)
    if kind == LatticeKind.RECT2D:
        return z if wrapped else z + 1
    if kind == LatticeKind.HEX:
        return z // 2 if wrapped else z // 2 + 1
    return handshake_bound(kind, w, wrapped=wrapped)


def best_bound(kind, w: Word, wrapped: bool = False) -> Tuple[int, str]:
    """The smaller of upper_bound and handshake_bound, with its name"""
    named = upper_bound(kind, w, wrapped)
    generic = handshake_bound(kind, w, wrapped or w.cyclic)
    if generic < named:
        return generic, GENERIC_BOUND
    return named, bound_name(kind, wrapped)
