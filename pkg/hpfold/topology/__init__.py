from .curves import ClosedCurve, Crossing, Diagram, default_param, project
from .invariants import fox3_bruteforce, fox3_count, fox3_count_curve, fox_matrix, linking_number, rank_mod
from .constructions import (
    CrossingStrands,
    ProperFoldReport,
    TrefoilReport,
    build_linked_cube_embedding,
    build_unlinked_cube_embedding,
    linked_cube_embedding,
    proper_fold_report,
    unlinked_cube_embedding,
    verify_trefoil24,
)

__all__ = [
    "ClosedCurve",
    "Crossing",
    "Diagram",
    "default_param",
    "project",
    "fox3_bruteforce",
    "fox3_count",
    "fox3_count_curve",
    "fox_matrix",
    "linking_number",
    "rank_mod",
    "CrossingStrands",
    "ProperFoldReport",
    "TrefoilReport",
    "build_linked_cube_embedding",
    "build_unlinked_cube_embedding",
    "linked_cube_embedding",
    "proper_fold_report",
    "unlinked_cube_embedding",
    "verify_trefoil24",
]
