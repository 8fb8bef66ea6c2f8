"""
Plain-text pictures of folds. Each site shows its letter; bonds are drawn
between sites on a doubled grid.
"""
import logging
from typing import Dict, List, Tuple

from hpfold.folding import Fold, require_valid, sites, walk
from hpfold.lattice import LatticeKind, Site
from hpfold.words import Word

logger = logging.getLogger(__name__)

Grid = Dict[Tuple[int, int], str]  # (row, col) -> character


def _bonds(fold: Fold) -> List[Tuple[Site, Site]]:
    positions = walk(fold)
    return list(zip(positions, positions[1:]))


def _emit(grid: Grid) -> List[str]:
    if not grid:
        return []
    rows = max(r for r, _ in grid) + 1
    cols = max(c for _, c in grid) + 1
    lines = []
    for r in range(rows):
        lines.append("".join(grid.get((r, c), " ") for c in range(cols)).rstrip())
    return lines


def _square_grid(labelled: Dict[Site, str], bonds: List[Tuple[Site, Site]],
                 min_x: int, max_y: int) -> Grid:
    grid: Grid = {}
    for (x, y, _), letter in labelled.items():
        grid[(2 * (max_y - y), 2 * (x - min_x))] = letter
    for a, b in bonds:
        row = (max_y - a[1]) + (max_y - b[1])
        col = (a[0] - min_x) + (b[0] - min_x)
        grid[(row, col)] = "-" if a[1] == b[1] else "|"
    return grid


def _tri_grid(labelled: Dict[Site, str], bonds: List[Tuple[Site, Site]]) -> Grid:
    """Axial (q, r) drawn with rows sheared half a cell per row"""
    def col(s: Site) -> int:
        return 4 * s[0] + 2 * s[1]

    min_col = min(col(s) for s in labelled)
    max_r = max(s[1] for s in labelled)
    grid: Grid = {}
    for s, letter in labelled.items():
        grid[(2 * (max_r - s[1]), col(s) - min_col)] = letter
    for a, b in bonds:
        if a[1] == b[1]:
            left = min(col(a), col(b)) - min_col
            for c in range(left + 1, left + 4):
                grid[(2 * (max_r - a[1]), c)] = "-"
            continue
        low, high = (a, b) if a[1] < b[1] else (b, a)
        mid = (col(low) + col(high)) // 2 - min_col
        grid[(2 * (max_r - low[1]) - 1, mid)] = "/" if high[0] == low[0] else "\\"
    return grid


def render_fold_ascii(fold: Fold, word: Word) -> str:
    """
    Text picture of a valid fold, top row first. rect3d folds print one block
    per z layer; bonds along z are not drawn.
    """
    require_valid(fold, word)
    labelled = dict(zip(sites(fold), word.letters))
    bonds = _bonds(fold)
    min_x = min(s[0] for s in labelled)
    max_y = max(s[1] for s in labelled)

    if fold.kind == LatticeKind.TRI:
        lines = _emit(_tri_grid(labelled, bonds))
    elif fold.kind == LatticeKind.RECT3D:
        lines = []
        for z in sorted({s[2] for s in labelled}):
            layer = {s: letter for s, letter in labelled.items() if s[2] == z}
            flat = [(a, b) for a, b in bonds if a[2] == z and b[2] == z]
            lines.append(f"z={z}")
            lines.extend(_emit(_square_grid(layer, flat, min_x, max_y)))
    else:
        lines = _emit(_square_grid(labelled, bonds, min_x, max_y))
    return "\n".join(lines) + "\n"
