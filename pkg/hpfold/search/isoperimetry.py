"""
Brute-force edge isoperimetry: the n-site connected sets with the most internal edges
"""
import logging
import time
from typing import Dict, Optional, Set, Tuple

from hpfold.errors import BudgetExceeded, InputError
from hpfold.lattice import (
    LatticeKind,
    ORIGIN,
    Site,
    canonical_form,
    internal_edges,
    l1_ball,
    neighbors,
    square,
    tri_ball,
    tri_ball_edges,
)
from hpfold.search.models import BallSquareReport, DaisyCheck, IsoResult, SearchLimits

logger = logging.getLogger(__name__)

ISO_MAX_N: Dict[LatticeKind, int] = {
    LatticeKind.RECT2D: 12,
    LatticeKind.TRI: 10,
    LatticeKind.RECT3D: 9,
}

Shape = Tuple[Site, ...]


def _grow(kind: LatticeKind, shapes: Set[Shape], limits: SearchLimits, started: float) -> Set[Shape]:
    grown: Set[Shape] = set()
    for shape in shapes:
        members = set(shape)
        frontier = {t for s in shape for t in neighbors(kind, s) if t not in members}
        for t in frontier:
            grown.add(canonical_form(kind, members | {t}))
        if time.monotonic() - started > limits.max_seconds or len(grown) > limits.max_nodes:
            raise BudgetExceeded(f"Isoperimetric enumeration ran out of budget at {len(grown)} shapes")
    return grown


def max_internal_edges(kind, n: int, limits: Optional[SearchLimits] = None) -> IsoResult:
    """
    Enumerate connected n-site sets up to congruence, one size at a time.

    Args:
        kind: rect2d (n <= 12), tri (n <= 10) or rect3d (n <= 9)
        n: set size
        limits: time and shape-count budget

    Returns:
        The maximum internal edge count and every maximiser, in canonical form
    """
    kind = LatticeKind(kind)
    if kind not in ISO_MAX_N:
        raise InputError(f"Isoperimetric enumeration is not available on {kind.value}")
    if n < 1 or n > ISO_MAX_N[kind]:
        raise InputError(f"n must be in 1..{ISO_MAX_N[kind]} on {kind.value}, got {n}")
    limits = limits or SearchLimits()
    started = time.monotonic()

    shapes: Set[Shape] = {canonical_form(kind, [ORIGIN])}
    examined = 1
    for size in range(2, n + 1):
        shapes = _grow(kind, shapes, limits, started)
        examined += len(shapes)
        logger.debug(f"{kind.value}: {len(shapes)} connected sets of size {size}")

    scored = [(internal_edges(kind, shape), shape) for shape in shapes]
    best = max(edges for edges, _ in scored)
    witnesses = sorted(shape for edges, shape in scored if edges == best)
    logger.info(f"{kind.value} n={n}: max {best} internal edges, {len(witnesses)} maximiser(s) of {len(shapes)} shapes")
    return IsoResult(kind=kind, n=n, max_internal_edges=best, witnesses=witnesses, sets_examined=examined)


def ball_vs_square_report(radius: int = 3, side: int = 5) -> BallSquareReport:
    """Internal edges of the planar L1 ball against the square with as many sites"""
    if radius < 0 or side < 0:
        raise InputError("radius and side must be nonnegative")
    ball = l1_ball(radius)
    block = square(side)
    return BallSquareReport(
        ball_radius=radius,
        ball_sites=len(ball),
        ball_edges=internal_edges(LatticeKind.RECT2D, ball),
        square_side=side,
        square_sites=len(block),
        square_edges=internal_edges(LatticeKind.RECT2D, block),
    )


def daisy_report(radius: int, limits: Optional[SearchLimits] = None) -> DaisyCheck:
    """Compare the daisy edge formula with exhaustive enumeration at 1+3r(r+1) sites"""
    daisy = tri_ball(radius)
    result = max_internal_edges(LatticeKind.TRI, len(daisy), limits)
    return DaisyCheck(
        radius=radius,
        n=len(daisy),
        formula_edges=tri_ball_edges(radius),
        search_edges=result.max_internal_edges,
        unique=result.unique,
        daisy_is_witness=canonical_form(LatticeKind.TRI, daisy) in result.witnesses,
    )
