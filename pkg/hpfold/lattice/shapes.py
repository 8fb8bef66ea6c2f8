"""
Named site sets: metric balls, squares, cubes and hexagonal daisies
"""
from typing import List

from hpfold.lattice.kinds import Site


def l1_ball(r: int) -> List[Site]:
    """Planar L1 ball of radius r in the square lattice (2r^2+2r+1 sites)"""
    return [(x, y, 0) for x in range(-r, r + 1) for y in range(-r, r + 1) if abs(x) + abs(y) <= r]


def square(k: int) -> List[Site]:
    return [(x, y, 0) for x in range(k) for y in range(k)]


def cube(k: int) -> List[Site]:
    return [(x, y, z) for x in range(k) for y in range(k) for z in range(k)]


def tri_ball(r: int) -> List[Site]:
    """Radius-r ball of the triangular lattice in axial coordinates (1+3r(r+1) sites)"""
    return [
        (q, s, 0)
        for q in range(-r, r + 1)
        for s in range(-r, r + 1)
        if max(abs(q), abs(s), abs(q + s)) <= r
    ]


def tri_ball_edges(r: int) -> int:
    """Internal edge count of the radius-r daisy"""
    return 9 * r * r + 3 * r
