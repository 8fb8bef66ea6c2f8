"""
Closed lattice curves and their generic planar diagrams.

Points are projected along d = (1, N, N^2) onto the integer plane basis
u = (N, -1, 0), v = (N^2, N^3, -1-N^2), both orthogonal to d. Heights along d
decide over and under. All intersection arithmetic is exact.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from hpfold.errors import InputError, VerificationError
from hpfold.folding import Fold, sites
from hpfold.lattice import LatticeKind, Site

logger = logging.getLogger(__name__)

MAX_RETRIES = 16

Point = Tuple[Fraction, Fraction]


@dataclass(frozen=True)
class ClosedCurve:
    """A self-avoiding lattice cycle in Z^3, listed without repeating the first vertex"""
    vertices: Tuple[Site, ...]

    def __post_init__(self):
        verts = tuple(tuple(int(c) for c in v) for v in self.vertices)
        object.__setattr__(self, "vertices", verts)
        if len(verts) < 4:
            raise InputError(f"A closed lattice curve needs at least 4 vertices, got {len(verts)}")
        if len(set(verts)) != len(verts):
            raise InputError("Closed curve revisits a vertex")
        for i, a in enumerate(verts):
            b = verts[(i + 1) % len(verts)]
            if sum(abs(p - q) for p, q in zip(a, b)) != 1:
                raise InputError(f"Closed curve step {a} -> {b} is not a unit step")

    @classmethod
    def from_fold(cls, f: Fold) -> "ClosedCurve":
        if not f.closed:
            raise InputError("Only closed folds define closed curves")
        if f.kind not in (LatticeKind.RECT2D, LatticeKind.RECT3D):
            raise InputError(f"Curves live in the cubic lattice; got a {f.kind.value} fold")
        return cls(vertices=tuple(sites(f)))

    def __len__(self) -> int:
        return len(self.vertices)

    def edges(self) -> List[Tuple[Site, Site]]:
        n = len(self.vertices)
        return [(self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n)]


@dataclass
class Crossing:
    """One crossing of the diagram; positions are (edge index, parameter along edge)"""
    over_curve: int
    over_edge: int
    over_t: Fraction
    under_curve: int
    under_edge: int
    under_t: Fraction
    sign: int
    point: Point
    over_arc: int = -1
    under_in_arc: int = -1
    under_out_arc: int = -1


@dataclass
class Diagram:
    """Projected curves, their crossings, and the arcs between under-crossings"""
    curves: List[ClosedCurve]
    crossings: List[Crossing]
    n_param: int
    plane: List[List[Tuple[int, int]]] = field(default_factory=list)
    arcs: int = 0

    def inter_curve(self) -> List[Crossing]:
        return [c for c in self.crossings if c.over_curve != c.under_curve]


class DegenerateProjection(Exception):
    pass


def _frame(n: int):
    d = (1, n, n * n)
    u = (n, -1, 0)
    v = (n * n, n ** 3, -1 - n * n)
    return d, u, v


def _dot(a: Sequence[int], b: Sequence[int]) -> int:
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def _cross(a: Sequence, b: Sequence):
    return a[0] * b[1] - a[1] * b[0]


def _segments_cross(a, b, c, d) -> Optional[Tuple[Fraction, Fraction]]:
    """Interior intersection parameters of 2D segments ab and cd, or None"""
    r = (b[0] - a[0], b[1] - a[1])
    s = (d[0] - c[0], d[1] - c[1])
    ca = (c[0] - a[0], c[1] - a[1])
    denom = _cross(r, s)
    if denom == 0:
        if _cross(ca, r) != 0:
            return None
        # collinear: any overlap is degenerate
        rr = _dot((*r, 0), (*r, 0))
        t0 = Fraction(_dot((*ca, 0), (*r, 0)), rr)
        t1 = t0 + Fraction(_dot((*s, 0), (*r, 0)), rr)
        lo, hi = min(t0, t1), max(t0, t1)
        if hi >= 0 and lo <= 1:
            raise DegenerateProjection("collinear overlap")
        return None
    t = Fraction(_cross(ca, s), denom)
    u = Fraction(_cross(ca, r), denom)
    if t < 0 or t > 1 or u < 0 or u > 1:
        return None
    if t in (0, 1) or u in (0, 1):
        raise DegenerateProjection("vertex on an edge")
    return t, u


def _project_once(curves: List[ClosedCurve], n: int) -> Diagram:
    d, u, v = _frame(n)
    plane = [[(_dot(p, u), _dot(p, v)) for p in curve.vertices] for curve in curves]
    height = [[_dot(p, d) for p in curve.vertices] for curve in curves]

    segs = []
    for ci, curve in enumerate(curves):
        m = len(curve)
        for i in range(m):
            segs.append((ci, i, plane[ci][i], plane[ci][(i + 1) % m], height[ci][i], height[ci][(i + 1) % m]))

    crossings: List[Crossing] = []
    seen_points = set()
    for x in range(len(segs)):
        c1, e1, a, b, ha, hb = segs[x]
        for y in range(x + 1, len(segs)):
            c2, e2, c, dd, hc, hd = segs[y]
            if c1 == c2:
                m = len(curves[c1])
                if abs(e1 - e2) in (1, m - 1):
                    continue
            hit = _segments_cross(a, b, c, dd)
            if hit is None:
                continue
            t, s = hit
            h1 = ha + t * (hb - ha)
            h2 = hc + s * (hd - hc)
            if h1 == h2:
                raise DegenerateProjection("equal heights")
            point = (a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]))
            if point in seen_points:
                raise DegenerateProjection("repeated crossing point")
            seen_points.add(point)
            dir1 = (b[0] - a[0], b[1] - a[1])
            dir2 = (dd[0] - c[0], dd[1] - c[1])
            if h1 > h2:
                over, under = (c1, e1, t, dir1), (c2, e2, s, dir2)
            else:
                over, under = (c2, e2, s, dir2), (c1, e1, t, dir1)
            sign = 1 if _cross(over[3], under[3]) > 0 else -1
            crossings.append(Crossing(
                over_curve=over[0], over_edge=over[1], over_t=over[2],
                under_curve=under[0], under_edge=under[1], under_t=under[2],
                sign=sign, point=point,
            ))
    diagram = Diagram(curves=list(curves), crossings=crossings, n_param=n, plane=plane)
    _label_arcs(diagram)
    return diagram


def _label_arcs(diagram: Diagram) -> None:
    """Split each curve at its under-crossings; arc k of a curve starts at its k-th under-crossing"""
    offset = 0
    starts: Dict[int, List[Tuple[int, Fraction]]] = {}
    arc_offset: Dict[int, int] = {}
    for ci in range(len(diagram.curves)):
        unders = sorted((c.under_edge, c.under_t) for c in diagram.crossings if c.under_curve == ci)
        starts[ci] = unders
        arc_offset[ci] = offset
        offset += max(len(unders), 1)
    diagram.arcs = offset

    def arc_at(ci: int, position: Tuple[int, Fraction]) -> int:
        unders = starts[ci]
        if not unders:
            return arc_offset[ci]
        k = sum(1 for p in unders if p <= position) - 1
        return arc_offset[ci] + (k % len(unders))

    for c in diagram.crossings:
        unders = starts[c.under_curve]
        k = unders.index((c.under_edge, c.under_t))
        c.under_out_arc = arc_offset[c.under_curve] + k
        c.under_in_arc = arc_offset[c.under_curve] + (k - 1) % len(unders)
        c.over_arc = arc_at(c.over_curve, (c.over_edge, c.over_t))


def default_param(curves: Sequence[ClosedCurve]) -> int:
    """Bounding-box span plus one"""
    pts = [p for curve in curves for p in curve.vertices]
    span = max(max(p[i] for p in pts) - min(p[i] for p in pts) for i in range(3))
    return span + 1


def project(c1: ClosedCurve, c2: Optional[ClosedCurve] = None, n: Optional[int] = None) -> Diagram:
    """
    Generic diagram of one or two curves.

    Args:
        c1: first curve
        c2: optional second curve, disjoint from the first
        n: projection parameter; defaults to the bounding-box span plus one and
            is increased until the projection is generic

    Returns:
        The diagram with crossings, signs and arc labels
    """
    curves = [c1] if c2 is None else [c1, c2]
    if c2 is not None and set(c1.vertices) & set(c2.vertices):
        raise InputError("Curves intersect")
    start = n if n is not None else default_param(curves)
    for attempt in range(MAX_RETRIES):
        try:
            diagram = _project_once(curves, start + attempt)
        except DegenerateProjection as e:
            logger.debug(f"Projection with N={start + attempt} degenerate ({e}); retrying")
            continue
        logger.debug(f"Projected {len(curves)} curve(s) with N={diagram.n_param}: {len(diagram.crossings)} crossings")
        return diagram
    raise VerificationError(f"No generic projection found for N in {start}..{start + MAX_RETRIES - 1}")
