"""
Point groups of the lattices, as integer matrices and as move-letter permutations
"""
import itertools
import logging
from functools import lru_cache
from typing import Dict, Iterable, List, Tuple

import numpy as np

from hpfold.errors import InputError
from hpfold.lattice.kinds import LatticeKind, Site, get_spec

logger = logging.getLogger(__name__)

CanonicalSites = Tuple[Site, ...]


def _embed(m2: List[List[int]]) -> np.ndarray:
    m = np.eye(3, dtype=np.int64)
    m[:2, :2] = np.array(m2, dtype=np.int64)
    return m


def _closure(generators: List[np.ndarray]) -> List[np.ndarray]:
    identity = np.eye(3, dtype=np.int64)
    seen: Dict[Tuple[int, ...], np.ndarray] = {tuple(identity.flatten()): identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for a in frontier:
            for g in generators:
                prod = g @ a
                key = tuple(prod.flatten())
                if key not in seen:
                    seen[key] = prod
                    nxt.append(prod)
        frontier = nxt
    return [seen[key] for key in sorted(seen)]


@lru_cache(maxsize=None)
def _group(kind: LatticeKind) -> Tuple[np.ndarray, ...]:
    if kind == LatticeKind.RECT2D:
        gens = [_embed([[0, -1], [1, 0]]), _embed([[-1, 0], [0, 1]])]
        return tuple(_closure(gens))
    if kind == LatticeKind.TRI:
        # axial (q, r): 60 degree rotation and the swap reflection
        gens = [_embed([[0, -1], [1, 1]]), _embed([[0, 1], [1, 0]])]
        return tuple(_closure(gens))
    if kind == LatticeKind.RECT3D:
        mats = []
        for perm in itertools.permutations(range(3)):
            for signs in itertools.product((1, -1), repeat=3):
                m = np.zeros((3, 3), dtype=np.int64)
                for row, col in enumerate(perm):
                    m[row, col] = signs[row]
                mats.append(m)
        return tuple(sorted(mats, key=lambda m: tuple(m.flatten())))
    # hex: only the mirror x -> -x acts letter by letter
    return (np.eye(3, dtype=np.int64), np.diag([-1, 1, 1]).astype(np.int64))


def point_group(kind) -> List[np.ndarray]:
    """Integer matrices of the lattice point group (rect2d 8, rect3d 48, tri 12, hex 2)"""
    return list(_group(LatticeKind(kind)))


@lru_cache(maxsize=None)
def _letter_permutations(kind: LatticeKind) -> Tuple[Tuple[Tuple[str, str], ...], ...]:
    spec = get_spec(kind)
    if kind == LatticeKind.HEX:
        return (
            tuple((m, m) for m in spec.alphabet),
            (("l", "r"), ("r", "l"), ("v", "v")),
        )
    by_vector = {vec: letter for letter, vec in spec.steps.items()}
    perms = []
    for mat in _group(kind):
        mapping = []
        for letter in spec.alphabet:
            image = tuple(int(c) for c in mat @ np.array(spec.steps[letter], dtype=np.int64))
            mapping.append((letter, by_vector[image]))
        perms.append(tuple(mapping))
    return tuple(perms)


def letter_permutations(kind) -> List[Dict[str, str]]:
    """The point group acting on move letters; the identity comes first"""
    perms = [dict(p) for p in _letter_permutations(LatticeKind(kind))]
    perms.sort(key=lambda p: any(k != v for k, v in p.items()))
    return perms


def transform_sites(sites: Iterable[Site], matrix: np.ndarray) -> List[Site]:
    pts = np.array(list(sites), dtype=np.int64).reshape(-1, 3)
    return [tuple(int(c) for c in row) for row in pts @ matrix.T]


def canonical_form(kind, sites: Iterable[Site]) -> CanonicalSites:
    """
    Least image of a finite site set under the point group, after translating
    each image so its coordinate-wise minimum is the origin.

    Two sets are congruent exactly when their canonical forms agree.
    """
    kind = LatticeKind(kind)
    if kind == LatticeKind.HEX:
        raise InputError("canonical_form is not defined for hex (its point group is not letterwise)")
    pts = np.array(list(sites), dtype=np.int64).reshape(-1, 3)
    if len(pts) == 0:
        return tuple()
    best = None
    for mat in _group(kind):
        image = pts @ mat.T
        image = image - image.min(axis=0)
        order = np.lexsort((image[:, 2], image[:, 1], image[:, 0]))
        key = tuple(tuple(int(c) for c in row) for row in image[order])
        if best is None or key < best:
            best = key
    return best
