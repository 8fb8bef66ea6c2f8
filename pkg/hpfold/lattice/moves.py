"""
Adjacency, moves and move-string notation on the four lattices
"""
import logging
from typing import Iterable, List, Set

from hpfold.errors import InputError
from hpfold.lattice.kinds import LatticeKind, Site, Vector, get_spec
from hpfold.notation import compress, expand

logger = logging.getLogger(__name__)


def check_site(kind: LatticeKind, s: Site) -> Site:
    """Validate coordinates for a lattice and return them as an int triple"""
    spec = get_spec(kind)
    if len(s) != 3 or not all(isinstance(c, int) for c in s):
        raise InputError(f"Site must be an integer 3-vector, got {s!r}")
    if spec.planar and s[2] != 0:
        raise InputError(f"{spec.kind.value} sites have z = 0, got {s!r}")
    return (s[0], s[1], s[2])


def step_vector(kind: LatticeKind, s: Site, m: str) -> Vector:
    """Displacement of move m taken from site s"""
    spec = get_spec(kind)
    if m not in spec.steps:
        raise InputError(f"Move {m!r} not in {spec.kind.value} alphabet {spec.alphabet!r}")
    vec = spec.steps[m]
    if vec is None:
        # hex vertical step
        return (0, 1, 0) if (s[0] + s[1]) % 2 == 0 else (0, -1, 0)
    return vec


def apply_move(kind: LatticeKind, s: Site, m: str) -> Site:
    """Site reached from s by move m"""
    dx, dy, dz = step_vector(kind, s, m)
    return (s[0] + dx, s[1] + dy, s[2] + dz)


def neighbors(kind: LatticeKind, s: Site) -> List[Site]:
    """All lattice neighbours of s, in move-alphabet order"""
    s = check_site(kind, s)
    return [apply_move(kind, s, m) for m in get_spec(kind).alphabet]


def inverse_move(kind: LatticeKind, m: str, s: Site) -> str:
    """Letter that undoes move m taken from site s"""
    target = apply_move(kind, s, m)
    for candidate in get_spec(kind).alphabet:
        if apply_move(kind, target, candidate) == s:
            return candidate
    raise InputError(f"No inverse for {m!r} at {s!r}")  # unreachable on a valid lattice


def is_adjacent(kind: LatticeKind, a: Site, b: Site) -> bool:
    return b in neighbors(kind, a)


def parse_moves(kind: LatticeKind, text: str) -> List[str]:
    """
    Parse a move string, expanding "^n" repetition and parenthesised groups.

    Example: (rect2d, "u^4 l^4 dd") -> u,u,u,u,l,l,l,l,d,d
    """
    return list(expand(text, get_spec(kind).alphabet))


def format_moves(moves: Iterable[str], compress_runs: bool = True) -> str:
    """Format moves so that parse_moves gives them back"""
    flat = "".join(moves)
    return compress(flat) if compress_runs else flat


def distance_lower_bound(kind: LatticeKind, a: Site, b: Site) -> int:
    """A lower bound on graph distance; exact on rect2d, rect3d and tri"""
    dx, dy, dz = b[0] - a[0], b[1] - a[1], b[2] - a[2]
    if LatticeKind(kind) == LatticeKind.TRI:
        return (abs(dx) + abs(dy) + abs(dx + dy)) // 2
    return abs(dx) + abs(dy) + abs(dz)


def internal_edges(kind: LatticeKind, sites: Iterable[Site]) -> int:
    """Number of lattice edges with both endpoints in the site set"""
    occupied: Set[Site] = set(sites)
    count = 0
    for s in occupied:
        count += sum(1 for t in neighbors(kind, s) if t in occupied)
    return count // 2


def coordinate_parity(s: Site) -> int:
    return (s[0] + s[1] + s[2]) % 2
