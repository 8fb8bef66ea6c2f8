"""
The HP objective: zero-zero contacts that are not chain edges
"""
import logging
from typing import Dict, List, Tuple

from hpfold.folding.fold import Fold, require_valid, sites
from hpfold.lattice import Site, internal_edges, neighbors
from hpfold.words import Word, occurrences

logger = logging.getLogger(__name__)

Contact = Tuple[int, int]


def _chain_adjacent(i: int, j: int, n: int, cyclic: bool) -> bool:
    gap = abs(i - j)
    return gap == 1 or (cyclic and gap == n - 1)


def contacts(f: Fold, w: Word) -> List[Contact]:
    """
    Every pair (i, j), i < j, of zeros at adjacent sites that are not
    consecutive in the chain (cyclically, for closed folds).

    Args:
        f: a valid fold of w
        w: the word

    Returns:
        The contact pairs, sorted
    """
    require_valid(f, w)
    placed = sites(f)
    index_of: Dict[Site, int] = {s: i for i, s in enumerate(placed)}
    n = len(w)
    pairs: List[Contact] = []
    for i, s in enumerate(placed):
        if w[i] != "0":
            continue
        for t in neighbors(f.kind, s):
            j = index_of.get(t)
            if j is None or j <= i or w[j] != "0":
                continue
            if _chain_adjacent(i, j, n, f.closed):
                continue
            pairs.append((i, j))
    return sorted(pairs)


def score(f: Fold, w: Word) -> int:
    """Number of contacts"""
    return len(contacts(f, w))


def zero_sites(f: Fold, w: Word) -> List[Site]:
    return [s for s, letter in zip(sites(f), w.letters) if letter == "0"]


def induced_edge_sum(f: Fold, w: Word) -> int:
    """I00(w) + score: the lattice edges internal to the zero set"""
    return occurrences("00", w) + score(f, w)


def zero_set_edges(f: Fold, w: Word) -> int:
    """Internal lattice edges of the zero sites, counted directly"""
    require_valid(f, w)
    return internal_edges(f.kind, zero_sites(f, w))
