"""
Linking number and Fox 3-colourings computed from generic diagrams
"""
import itertools
import logging
from typing import List

import numpy as np

from hpfold.errors import InputError, VerificationError
from hpfold.topology.curves import ClosedCurve, Diagram, project

logger = logging.getLogger(__name__)

BRUTEFORCE_MAX_ARCS = 12


def linking_number(c1: ClosedCurve, c2: ClosedCurve) -> int:
    """
    Half the signed count of crossings between the two curves, computed for
    two projection parameters that must agree.
    """
    first = project(c1, c2)
    second = project(c1, c2, n=first.n_param + 1)
    values = []
    for diagram in (first, second):
        total = sum(c.sign for c in diagram.inter_curve())
        if total % 2:
            raise VerificationError(f"Odd inter-curve crossing sum {total} at N={diagram.n_param}")
        values.append(total // 2)
    if values[0] != values[1]:
        raise VerificationError(f"Linking number depends on projection: {values}")
    return values[0]


def fox_matrix(d: Diagram) -> np.ndarray:
    """One row per crossing: 2*over - under_in - under_out, mod 3"""
    matrix = np.zeros((len(d.crossings), d.arcs), dtype=np.int64)
    for row, c in enumerate(d.crossings):
        matrix[row, c.over_arc] += 2
        matrix[row, c.under_in_arc] -= 1
        matrix[row, c.under_out_arc] -= 1
    return matrix % 3


def rank_mod(matrix: np.ndarray, p: int = 3) -> int:
    """Rank over GF(p) by Gaussian elimination"""
    m = np.array(matrix, dtype=np.int64) % p
    if m.size == 0:
        return 0
    rows, cols = m.shape
    rank = 0
    for col in range(cols):
        pivot = next((r for r in range(rank, rows) if m[r, col]), None)
        if pivot is None:
            continue
        m[[rank, pivot]] = m[[pivot, rank]]
        m[rank] = (m[rank] * pow(int(m[rank, col]), -1, p)) % p
        for r in range(rows):
            if r != rank and m[r, col]:
                m[r] = (m[r] - m[r, col] * m[rank]) % p
        rank += 1
        if rank == rows:
            break
    return rank


def fox3_count(d: Diagram) -> int:
    """Number of arc colourings by Z/3 satisfying every crossing relation"""
    if d.arcs == 0:
        return 1
    return 3 ** (d.arcs - rank_mod(fox_matrix(d), 3))


def fox3_bruteforce(d: Diagram) -> int:
    """Reference count by trying every colouring; small diagrams only"""
    if d.arcs > BRUTEFORCE_MAX_ARCS:
        raise InputError(f"Brute-force colouring needs at most {BRUTEFORCE_MAX_ARCS} arcs, diagram has {d.arcs}")
    matrix = fox_matrix(d)
    count = 0
    for colours in itertools.product(range(3), repeat=d.arcs):
        if not np.any((matrix @ np.array(colours, dtype=np.int64)) % 3):
            count += 1
    return count


def fox3_count_curve(curve: ClosedCurve) -> int:
    """fox3_count for one curve, checked against a second projection"""
    first = project(curve)
    second = project(curve, n=first.n_param + 1)
    counts: List[int] = [fox3_count(first), fox3_count(second)]
    if counts[0] != counts[1]:
        raise VerificationError(f"Fox 3-colouring count depends on projection: {counts}")
    logger.debug(f"Fox 3-colourings: {counts[0]} ({first.arcs} arcs, {len(first.crossings)} crossings)")
    return counts[0]
