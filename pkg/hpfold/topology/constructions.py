"""
Knotted and linked folds: the 24-step trefoil and two ways to fill the 4-cube
with loops of length 8 and 56.
"""
import logging
from typing import List, Tuple

from pydantic import BaseModel, Field

from hpfold.errors import VerificationError
from hpfold.folding import (
    Fold,
    contacts,
    decode_catalog_entry,
    induced_edge_sum,
    score,
    zero_set_edges,
    zeros_fill_cube,
)
from hpfold.lattice import LatticeKind, Site, cube
from hpfold.multichain import Chain, Embedding
from hpfold.topology.curves import ClosedCurve, project
from hpfold.topology.invariants import fox3_count_curve, linking_number
from hpfold.words import Word, occurrences, special_words

logger = logging.getLogger(__name__)

CUBE_SIDE = 4

# (start, moves) of the 8-loop and the 56-loop
_LINKED = (
    ((1, 0, 2), "uurrddll"),
    ((2, 1, 2), "brdlllbrrrulllurrrulllfddruurdrufllldddfruluurdrurdddlub"),
)
_UNLINKED = (
    ((0, 0, 0), "rrrullld"),
    ((0, 2, 2), "dbdffuuubbdburrrdllfrrullfrrflldrrdlldrrbllbrrullfrrulll"),
)


def _curve(start: Site, moves: str) -> ClosedCurve:
    return ClosedCurve.from_fold(Fold(kind=LatticeKind.RECT3D, start=start, moves=moves, closed=True))


def _check_partition(short: ClosedCurve, long: ClosedCurve) -> None:
    if (len(short), len(long)) != (8, 56):
        raise VerificationError(f"Loop lengths are {len(short)} and {len(long)}, expected 8 and 56")
    union = set(short.vertices) | set(long.vertices)
    if set(short.vertices) & set(long.vertices) or union != set(cube(CUBE_SIDE)):
        raise VerificationError("Loops do not partition the 4-cube")


def build_linked_cube_embedding() -> Tuple[ClosedCurve, ClosedCurve]:
    """Loops of length 8 and 56 filling the 4-cube with linking number +-1"""
    short, long = (_curve(start, moves) for start, moves in _LINKED)
    _check_partition(short, long)
    lk = linking_number(short, long)
    if abs(lk) != 1:
        raise VerificationError(f"Linked cube loops have linking number {lk}")
    return short, long


def build_unlinked_cube_embedding() -> Tuple[ClosedCurve, ClosedCurve]:
    """The same partition into 8 and 56 sites, unlinked"""
    short, long = (_curve(start, moves) for start, moves in _UNLINKED)
    _check_partition(short, long)
    lk = linking_number(short, long)
    if lk != 0:
        raise VerificationError(f"Unlinked cube loops have linking number {lk}")
    return short, long


def _as_embedding(curves: Tuple[ClosedCurve, ClosedCurve]) -> Embedding:
    words = special_words()
    return Embedding(chains=[
        Chain(word=words["link8"], sites=list(curves[0].vertices)),
        Chain(word=words["link56"], sites=list(curves[1].vertices)),
    ])


def linked_cube_embedding() -> Embedding:
    """The linked loops carrying 0^8 and the 56-letter word; their zeros fill a 3-cube"""
    return _as_embedding(build_linked_cube_embedding())


def unlinked_cube_embedding() -> Embedding:
    return _as_embedding(build_unlinked_cube_embedding())


class TrefoilReport(BaseModel):
    moves: str
    mapping: dict
    valid_mappings: int
    length: int
    score: int
    zero_cube: bool
    zero_set_edges: int
    chain_zero_edges: int
    fox3: int


def verify_trefoil24() -> TrefoilReport:
    """
    Decode the 24-step trefoil, then check closure, length, score, the 2-cube
    of zeros and the Fox 3-colouring count.
    """
    decoded = decode_catalog_entry("trefoil24")
    word = special_words()["trefoil24"]
    fold = decoded.fold_for(decoded.canonical, closed=True)
    report = TrefoilReport(
        moves=fold.moves,
        mapping=decoded.canonical,
        valid_mappings=len(decoded.mappings),
        length=len(fold.moves),
        score=score(fold, word),
        zero_cube=zeros_fill_cube(fold, word, 2),
        zero_set_edges=zero_set_edges(fold, word),
        chain_zero_edges=occurrences("00", word),
        fox3=fox3_count_curve(ClosedCurve.from_fold(fold)),
    )
    failures = []
    if report.length != 24:
        failures.append(f"length {report.length}")
    if report.score != 6:
        failures.append(f"score {report.score}")
    if not report.zero_cube:
        failures.append("zeros do not fill a 2-cube")
    if induced_edge_sum(fold, word) != report.zero_set_edges:
        failures.append("induced edge sum disagrees with zero-set edges")
    if report.fox3 != 9:
        failures.append(f"fox3 {report.fox3}")
    if failures:
        raise VerificationError(f"Trefoil-24 check failed: {', '.join(failures)}")
    logger.info(f"Trefoil-24 verified: moves {report.moves}, score 6, 9 colourings")
    return report


class CrossingStrands(BaseModel):
    over_index: int
    under_index: int
    index_gap: int
    contacts_between: List[Tuple[int, int]] = Field(default_factory=list)


class ProperFoldReport(BaseModel):
    """Descriptive only: which contacts lie on the chain between crossing strands"""
    crossings: List[CrossingStrands] = Field(default_factory=list)
    contacts: List[Tuple[int, int]] = Field(default_factory=list)


def proper_fold_report(fold: Fold, word: Word) -> ProperFoldReport:
    """
    For each crossing of the fold's diagram, the word indices of the over and
    under strands, their cyclic gap, and the contacts with an endpoint on the
    shorter chain segment between them.
    """
    pairs = contacts(fold, word)
    n = len(word)
    diagram = project(ClosedCurve.from_fold(fold))
    report = ProperFoldReport(contacts=pairs)
    for c in sorted(diagram.crossings, key=lambda x: (x.over_edge, x.under_edge)):
        i, j = c.over_edge, c.under_edge
        forward = (j - i) % n
        if forward <= n - forward:
            segment = {(i + k) % n for k in range(forward + 1)}
        else:
            segment = {(j + k) % n for k in range(n - forward + 1)}
        report.crossings.append(CrossingStrands(
            over_index=i,
            under_index=j,
            index_gap=min(forward, n - forward),
            contacts_between=[p for p in pairs if p[0] in segment or p[1] in segment],
        ))
    return report
