"""
Decoding keyboard-letter move strings into rect3d folds.

A move string recorded as keyboard letters has no stated key-to-direction
mapping, so every bijection from the six keys onto the six rect3d steps is
tried and the ones that give a valid fold satisfying the constraints are kept.
"""
import itertools
import logging
from typing import Callable, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from hpfold.config import settings
from hpfold.errors import InputError, VerificationError
from hpfold.folding.fold import Fold, validate, sites
from hpfold.lattice import LatticeKind, get_spec
from hpfold.words import Word, special_words

logger = logging.getLogger(__name__)

KEYBOARD_MOVES: Dict[str, str] = {
    "trefoil24": "eddfwwffssaeeweddffaaaes",
    "cube54": "aasddsdwwdwaawasewdsddsassawaawdeasddsdwwdwaawasedsff",
}


class DecodeConstraints(BaseModel):
    """What a decoded fold must satisfy besides being a valid fold of word"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    word: Word
    closed: bool = False
    zero_cube: Optional[int] = None  # side of the cube the zero sites must fill
    predicate: Optional[Callable[[Fold, Word], bool]] = None


class DecodeResult(BaseModel):
    text: str
    mappings: List[Dict[str, str]] = Field(default_factory=list)

    @property
    def canonical(self) -> Dict[str, str]:
        return self.mappings[0]

    def fold_for(self, mapping: Dict[str, str], closed: bool) -> Fold:
        return Fold(
            kind=LatticeKind.RECT3D,
            moves="".join(mapping[c] for c in self.text),
            closed=closed,
        )


def zeros_fill_cube(f: Fold, w: Word, side: int) -> bool:
    """True iff the zero sites are exactly an axis-aligned side^3 box"""
    zero_pts = {s for s, letter in zip(sites(f), w.letters) if letter == "0"}
    if len(zero_pts) != side ** 3:
        return False
    lo = [min(p[axis] for p in zero_pts) for axis in range(3)]
    return all(
        (lo[0] + dx, lo[1] + dy, lo[2] + dz) in zero_pts
        for dx in range(side) for dy in range(side) for dz in range(side)
    )


def _satisfies(f: Fold, constraints: DecodeConstraints) -> bool:
    if not validate(f, constraints.word).ok:
        return False
    if constraints.zero_cube is not None and not zeros_fill_cube(f, constraints.word, constraints.zero_cube):
        return False
    if constraints.predicate is not None and not constraints.predicate(f, constraints.word):
        return False
    return True


def decode_keyboard_moves(text: str, constraints: DecodeConstraints, keys: Optional[str] = None) -> DecodeResult:
    """
    Try all 720 key-to-step bijections.

    Mappings are listed in lexicographic order of the step letters assigned to
    the sorted keys; the first one is the canonical mapping.

    Args:
        text: move string over the keyboard letters
        constraints: word, closure and zero-shape requirements
        keys: the six keyboard letters, default settings.DECODE_KEYS

    Returns:
        Every valid mapping, canonical first
    """
    keys = "".join(sorted(keys or settings.DECODE_KEYS))
    if not text:
        raise InputError("Empty keyboard move string")
    if len(keys) != 6:
        raise InputError(f"Need exactly six keyboard letters, got {keys!r}")
    stray = sorted(set(text) - set(keys))
    if stray:
        raise InputError(f"Keyboard letters {stray} not in {keys!r}")

    alphabet = get_spec(LatticeKind.RECT3D).alphabet
    result = DecodeResult(text=text)
    for targets in itertools.permutations(alphabet):
        mapping = dict(zip(keys, targets))
        fold = result.fold_for(mapping, constraints.closed)
        if _satisfies(fold, constraints):
            result.mappings.append(mapping)

    logger.info(f"Decoded {len(text)} keyboard moves: {len(result.mappings)} valid mappings")
    if not result.mappings:
        raise VerificationError(f"No key mapping of {text!r} satisfies the constraints")
    return result


def compare_decodings(first: DecodeResult, second: DecodeResult) -> Dict[str, bool]:
    """Whether two decoded strings agree on the canonical mapping and on the full mapping set"""
    def as_keys(r: DecodeResult):
        return {tuple(sorted(m.items())) for m in r.mappings}

    return {
        "same_canonical": first.canonical == second.canonical,
        "same_mapping_set": as_keys(first) == as_keys(second),
    }


def keyboard_catalog() -> Dict[str, DecodeConstraints]:
    """Constraints for the catalogued keyboard strings"""
    words = special_words()
    return {
        "trefoil24": DecodeConstraints(word=words["trefoil24"], closed=True, zero_cube=2),
        "cube54": DecodeConstraints(word=words["cube54"], closed=False, zero_cube=3),
    }


def decode_catalog_entry(name: str) -> DecodeResult:
    catalog = keyboard_catalog()
    if name not in catalog:
        raise InputError(f"Unknown keyboard string {name!r}; expected one of {sorted(catalog)}")
    return decode_keyboard_moves(KEYBOARD_MOVES[name], catalog[name])
