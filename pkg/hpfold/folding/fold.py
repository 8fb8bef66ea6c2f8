"""
Folds: open and closed self-avoiding walks on a lattice, labelled by a word
"""
import logging
from enum import Enum
from typing import Dict, List, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from hpfold.errors import InputError
from hpfold.lattice import (
    LatticeKind,
    ORIGIN,
    Site,
    apply_move,
    check_site,
    get_spec,
    parse_moves,
)
from hpfold.words import Construction, Word

logger = logging.getLogger(__name__)


class Fold(BaseModel):
    """
    A lattice kind, a start site and a move string. A closed fold has one move
    per word letter and its last move returns to the start.
    """
    model_config = ConfigDict(frozen=True)

    kind: LatticeKind
    start: Site = ORIGIN
    moves: str = ""
    closed: bool = False

    @model_validator(mode="after")
    def _check_moves(self) -> "Fold":
        alphabet = get_spec(self.kind).alphabet
        bad = sorted(set(self.moves) - set(alphabet))
        if bad:
            raise ValueError(f"moves {bad} not in {self.kind.value} alphabet {alphabet!r}")
        check_site(self.kind, self.start)
        return self

    @classmethod
    def parse(cls, kind, moves: str, closed: bool = False, start: Site = ORIGIN) -> "Fold":
        """Build a fold from move notation such as "u^4 l^4 dd" """
        kind = LatticeKind(kind)
        return cls(kind=kind, start=tuple(start), moves="".join(parse_moves(kind, moves)), closed=closed)

    @classmethod
    def from_construction(cls, construction: Construction) -> "Fold":
        return cls(
            kind=construction.kind,
            start=construction.start,
            moves=construction.moves,
            closed=construction.closed,
        )

    def __len__(self) -> int:
        return len(self.moves)


class ViolationKind(str, Enum):
    """Ways a fold can fail to be a valid fold of a word"""
    REVISIT = "revisit"
    LENGTH_MISMATCH = "length_mismatch"
    NOT_CLOSED = "not_closed"
    SHORT_CYCLE = "short_cycle"
    CYCLIC_MISMATCH = "cyclic_mismatch"


class Violation(BaseModel):
    kind: ViolationKind
    detail: str
    indices: List[int] = Field(default_factory=list)


class ValidationReport(BaseModel):
    """Outcome of validate(); ok iff there are no violations"""
    violations: List[Violation] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        if self.ok:
            return "ok"
        return "; ".join(f"{v.kind.value}: {v.detail}" for v in self.violations)


def walk(f: Fold) -> List[Site]:
    """Every position of the walk, including the return to start of a closed fold"""
    positions = [f.start]
    current = f.start
    for m in f.moves:
        current = apply_move(f.kind, current, m)
        positions.append(current)
    return positions


def sites(f: Fold) -> List[Site]:
    """The occupied sites, one per word letter"""
    positions = walk(f)
    return positions[:-1] if f.closed else positions


def validate(f: Fold, w: Word) -> ValidationReport:
    """
    Check self-avoidance, the word/fold length match and closure.

    Returns:
        A report listing every violation found
    """
    report = ValidationReport()
    positions = walk(f)
    expected = len(f.moves) if f.closed else len(f.moves) + 1
    if len(w) != expected:
        report.violations.append(Violation(
            kind=ViolationKind.LENGTH_MISMATCH,
            detail=f"word has {len(w)} letters, fold has {expected} sites",
        ))
    if w.cyclic != f.closed:
        report.violations.append(Violation(
            kind=ViolationKind.CYCLIC_MISMATCH,
            detail=f"word cyclic={w.cyclic} but fold closed={f.closed}",
        ))
    if f.closed:
        if positions[-1] != f.start:
            report.violations.append(Violation(
                kind=ViolationKind.NOT_CLOSED,
                detail=f"walk ends at {positions[-1]}, not at start {f.start}",
            ))
        if len(f.moves) < 3:
            report.violations.append(Violation(
                kind=ViolationKind.SHORT_CYCLE,
                detail=f"a closed fold needs at least 3 moves, got {len(f.moves)}",
            ))

    occupied = positions[:-1] if f.closed else positions
    first_seen: Dict[Site, int] = {}
    for index, site in enumerate(occupied):
        if site in first_seen:
            report.violations.append(Violation(
                kind=ViolationKind.REVISIT,
                detail=f"sites {first_seen[site]} and {index} coincide at {site}",
                indices=[first_seen[site], index],
            ))
        else:
            first_seen[site] = index
    return report


def require_valid(f: Fold, w: Word) -> None:
    report = validate(f, w)
    if not report.ok:
        raise InputError(f"Invalid fold: {report.summary()}")


def fold_from_sites(kind, path: Sequence[Site], closed: bool = False) -> Fold:
    """Recover the move string of a walk given by its sites"""
    kind = LatticeKind(kind)
    if not path:
        raise InputError("Empty site sequence")
    stops = list(path) + ([path[0]] if closed else [])
    letters = []
    for a, b in zip(stops, stops[1:]):
        letter = next((m for m in get_spec(kind).alphabet if apply_move(kind, a, m) == b), None)
        if letter is None:
            raise InputError(f"{a} and {b} are not adjacent on {kind.value}")
        letters.append(letter)
    return Fold(kind=kind, start=tuple(path[0]), moves="".join(letters), closed=closed)


def reverse_fold(f: Fold) -> Fold:
    """The same walk traversed backwards; it folds reverse(w)"""
    return fold_from_sites(f.kind, sites(f)[::-1], closed=f.closed)


def transform_fold(f: Fold, permutation: Dict[str, str]) -> Fold:
    """Apply a point-group letter permutation; the result is congruent to f"""
    return Fold(
        kind=f.kind,
        start=f.start,
        moves="".join(permutation[m] for m in f.moves),
        closed=f.closed,
    )


def drop_ends(f: Fold, w: Word, front: int, back: int) -> Tuple[Fold, Word]:
    """
    Remove `front` leading and `back` trailing letters together with their sites.

    Args:
        f: an open fold of w
        w: the word
        front: letters dropped from the start
        back: letters dropped from the end

    Returns:
        The induced subfold and subword
    """
    if f.closed:
        raise InputError("drop_ends applies to open folds only")
    if front < 0 or back < 0 or front + back >= len(w):
        raise InputError(f"Cannot drop {front}+{back} letters from a word of length {len(w)}")
    if front == 0 and back == 0:
        return f, w
    positions = walk(f)
    sub = Fold(
        kind=f.kind,
        start=positions[front],
        moves=f.moves[front:len(f.moves) - back],
        closed=False,
    )
    return sub, Word(letters=w.letters[front:len(w) - back], cyclic=False)
