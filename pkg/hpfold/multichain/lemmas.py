"""
Boundary counts, ring placements and the score arithmetic that forces the
intended embedding to be optimal under h_c for large c.
"""
import logging
from typing import Iterable, List, Optional, Set

from hpfold.errors import InputError, VerificationError
from hpfold.lattice import LatticeKind, ORIGIN, Site, neighbors
from hpfold.multichain.models import LevelsAudit, RingHypothesis, RingPlacementReport, TripleShape

logger = logging.getLogger(__name__)

CUBIC = LatticeKind.RECT3D
STRAIGHT_TRIPLE = ((-1, 0, 0), (0, 0, 0), (1, 0, 0))
BENT_TRIPLE = ((0, 1, 0), (0, 0, 0), (1, 0, 0))
RING_LENGTH = 8


def vertex_boundary(sites: Iterable[Site]) -> Set[Site]:
    """Sites at L1 distance exactly 1 from the set"""
    members = {tuple(s) for s in sites}
    return {t for s in members for t in neighbors(CUBIC, s)} - members


def _l1(a: Site, b: Site) -> int:
    return sum(abs(p - q) for p, q in zip(a, b))


def classify_triple(x: Site, y: Site, z: Site) -> TripleShape:
    """Straight when y is the midpoint of x and z, bent otherwise"""
    if _l1(x, y) != 1 or _l1(y, z) != 1:
        raise InputError(f"{x}, {y}, {z} are not consecutive unit steps")
    if tuple(x) == tuple(z):
        raise InputError("A triple needs distinct end sites")
    if all(2 * b == a + c for a, b, c in zip(x, y, z)):
        return TripleShape.STRAIGHT
    return TripleShape.BENT


def ring_image(triple=STRAIGHT_TRIPLE) -> tuple:
    """The 8 sites around the middle of a straight triple, in the plane normal to it"""
    x, y, _ = triple
    axis = next(i for i in range(3) if x[i] != y[i])
    others = [i for i in range(3) if i != axis]
    ring = []
    for a in (-1, 0, 1):
        for b in (-1, 0, 1):
            if a == 0 and b == 0:
                continue
            site = list(y)
            site[others[0]] += a
            site[others[1]] += b
            ring.append(tuple(site))
    return tuple(sorted(ring))


def enumerate_ring_placements(
    triple=STRAIGHT_TRIPLE,
    hypothesis: RingHypothesis = RingHypothesis.EVEN_INDEX,
) -> RingPlacementReport:
    """
    Every injective cyclic unit-step map f: Z/8 -> Z^3 minus the triple with
    all even-index images on the triple's boundary.

    Args:
        triple: a straight triple; its middle site is the one rings must touch
        hypothesis: which image must be adjacent to the middle site

    Returns:
        All solutions, their distinct images, and the expected ring image
    """
    triple = tuple(tuple(s) for s in triple)
    if classify_triple(*triple) != TripleShape.STRAIGHT:
        raise InputError("Ring placements are enumerated around a straight triple")
    blocked = set(triple)
    boundary = sorted(vertex_boundary(triple))
    boundary_set = set(boundary)
    middle = triple[1]
    solutions: List[List[Site]] = []
    path: List[Site] = []

    def touches(indices) -> bool:
        return any(_l1(path[i], middle) == 1 for i in indices)

    def accept() -> bool:
        if hypothesis == RingHypothesis.EVEN_INDEX:
            return touches(range(0, RING_LENGTH, 2))
        if hypothesis == RingHypothesis.ANY_INDEX:
            return touches(range(RING_LENGTH))
        return True

    def extend() -> None:
        k = len(path)
        if k == RING_LENGTH:
            if _l1(path[-1], path[0]) == 1 and accept():
                solutions.append(list(path))
            return
        if _l1(path[-1], path[0]) > RING_LENGTH - k + 1:
            return
        for t in neighbors(CUBIC, path[-1]):
            if t in blocked or t in path:
                continue
            if k % 2 == 0 and t not in boundary_set:
                continue
            path.append(t)
            extend()
            path.pop()

    for start in boundary:
        path.append(start)
        extend()
        path.pop()

    images = sorted({tuple(sorted(sol)) for sol in solutions})
    report = RingPlacementReport(
        hypothesis=hypothesis,
        solutions=solutions,
        images=images,
        expected_image=ring_image(triple),
    )
    logger.info(f"Ring placements ({hypothesis.value}): {len(solutions)} maps, {len(images)} image(s)")
    return report


def require_ring_lemma(report: RingPlacementReport) -> None:
    if not report.all_match:
        raise VerificationError(
            f"Ring placements under {report.hypothesis.value} hypothesis give {len(report.images)} images"
        )


def intended_score(c: int) -> int:
    return 12 * (c + 1) + 16


def levels_bound_audit(x: int, c: int, strict_from: Optional[int] = 10) -> LevelsAudit:
    """
    Best scores an embedding with x fewer c-contributions could reach.

    For x in 1..4 the straight and bent configurations are audited separately;
    for larger x every 1-contribution point is granted. Strictness is required
    once c >= strict_from.
    """
    if x < 1 or x > 12:
        raise InputError(f"x must be in 1..12, got {x}")
    if c < 0:
        raise InputError(f"c must be nonnegative, got {c}")
    if x <= 4:
        straight = (12 - x) * (c + 1) + (4 - x) * 6 + 8 * x
        bent = (11 - x) * (c + 1) + 4 + (3 - x) * 6 + 8 * x
    else:
        straight = bent = (12 - x) * (c + 1) + 32
    audit = LevelsAudit(
        x=x,
        c=c,
        straight_value=straight,
        bent_value=bent,
        intended_value=intended_score(c),
        threshold_holds=(c + 1) * x > 8 + 2 * x,
    )
    if strict_from is not None and c >= strict_from and not audit.strict:
        raise VerificationError(f"Audit not strict at x={x}, c={c}: {audit}")
    return audit
