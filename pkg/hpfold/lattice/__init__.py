from .kinds import LatticeKind, LatticeSpec, LATTICES, ORIGIN, Site, Vector, get_spec
from .moves import (
    apply_move,
    check_site,
    coordinate_parity,
    distance_lower_bound,
    format_moves,
    internal_edges,
    inverse_move,
    is_adjacent,
    neighbors,
    parse_moves,
    step_vector,
)
from .symmetry import canonical_form, letter_permutations, point_group, transform_sites
from .shapes import cube, l1_ball, square, tri_ball, tri_ball_edges

__all__ = [
    "LatticeKind",
    "LatticeSpec",
    "LATTICES",
    "ORIGIN",
    "Site",
    "Vector",
    "get_spec",
    "apply_move",
    "check_site",
    "coordinate_parity",
    "distance_lower_bound",
    "format_moves",
    "internal_edges",
    "inverse_move",
    "is_adjacent",
    "neighbors",
    "parse_moves",
    "step_vector",
    "canonical_form",
    "letter_permutations",
    "point_group",
    "transform_sites",
    "cube",
    "l1_ball",
    "square",
    "tri_ball",
    "tri_ball_edges",
]
