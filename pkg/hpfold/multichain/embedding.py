"""
Validation and weighted scoring of closed-chain embeddings
"""
import logging
from typing import Dict, List, Set, Tuple

from hpfold.errors import InputError
from hpfold.lattice import LatticeKind, Site, coordinate_parity, neighbors
from hpfold.multichain.models import (
    Chain,
    Embedding,
    EmbeddingReport,
    EmbeddingViolation,
    EmbeddingViolationKind,
    HydroLevels,
    ParityClass,
)
from hpfold.words import Word, multiset_M

logger = logging.getLogger(__name__)

SitePair = Tuple[Site, Site]

CUBIC = LatticeKind.RECT3D


def _l1(a: Site, b: Site) -> int:
    return abs(a[0] - b[0]) + abs(a[1] - b[1]) + abs(a[2] - b[2])


def validate_embedding(e: Embedding) -> EmbeddingReport:
    """Check lengths, injectivity, unit steps (cyclically) and disjointness of chains"""
    report = EmbeddingReport()
    owner: Dict[Site, int] = {}
    for ci, chain in enumerate(e.chains):
        n = len(chain.word)
        if len(chain.sites) != n:
            report.violations.append(EmbeddingViolation(
                kind=EmbeddingViolationKind.LENGTH_MISMATCH,
                detail=f"word has {n} letters but {len(chain.sites)} sites",
                chain=ci,
            ))
            continue
        seen: Dict[Site, int] = {}
        for i, s in enumerate(chain.sites):
            if s in seen:
                report.violations.append(EmbeddingViolation(
                    kind=EmbeddingViolationKind.NOT_INJECTIVE,
                    detail=f"indices {seen[s]} and {i} share {s}",
                    chain=ci,
                    indices=[seen[s], i],
                ))
            else:
                seen[s] = i
            nxt = chain.sites[(i + 1) % n]
            if _l1(s, nxt) != 1:
                report.violations.append(EmbeddingViolation(
                    kind=EmbeddingViolationKind.BAD_STEP,
                    detail=f"{s} -> {nxt} is not a unit step",
                    chain=ci,
                    indices=[i, (i + 1) % n],
                ))
        for s in seen:
            if s in owner:
                report.violations.append(EmbeddingViolation(
                    kind=EmbeddingViolationKind.OVERLAP,
                    detail=f"{s} is used by chains {owner[s]} and {ci}",
                    chain=ci,
                ))
            else:
                owner[s] = ci
    return report


def _require_valid(e: Embedding) -> None:
    report = validate_embedding(e)
    if not report.ok:
        raise InputError(f"Invalid embedding: {report.summary()}")


def _chain_edges(e: Embedding) -> Set[frozenset]:
    edges = set()
    for chain in e.chains:
        n = len(chain.sites)
        for i in range(n):
            edges.add(frozenset((chain.sites[i], chain.sites[(i + 1) % n])))
    return edges


def potential_contacts(e: Embedding) -> Set[SitePair]:
    """Adjacent occupied site pairs that are not chain edges, each as a sorted pair"""
    _require_valid(e)
    occupied = e.occupancy()
    chain_edges = _chain_edges(e)
    pairs: Set[SitePair] = set()
    for s in occupied:
        for t in neighbors(CUBIC, s):
            if t in occupied and s < t and frozenset((s, t)) not in chain_edges:
                pairs.add((s, t))
    return pairs


def pair_value(h: HydroLevels, a: str, b: str) -> int:
    """h(a)+h(b) if both levels are nonzero, else 0"""
    if a not in h.h or b not in h.h:
        raise InputError(f"Unknown symbol in pair ({a!r}, {b!r})")
    ha, hb = h.h[a], h.h[b]
    return ha + hb if ha and hb else 0


def contributions(e: Embedding, h: HydroLevels) -> List[Tuple[SitePair, int]]:
    """Every potential contact with a nonzero value, sorted"""
    occupied = e.occupancy()
    out = []
    for s, t in sorted(potential_contacts(e)):
        (ca, ia), (cb, ib) = occupied[s], occupied[t]
        value = pair_value(h, e.chains[ca].word[ia], e.chains[cb].word[ib])
        if value:
            out.append(((s, t), value))
    return out


def embedding_score(e: Embedding, h: HydroLevels) -> int:
    """Sum of pair values over all potential contacts"""
    return sum(value for _, value in contributions(e, h))


def _ring(x: int) -> List[Site]:
    # zeros at edge midpoints (even indices), corners at odd indices
    return [
        (x, 0, 1), (x, 1, 1), (x, 1, 0), (x, 1, -1),
        (x, 0, -1), (x, -1, -1), (x, -1, 0), (x, -1, 1),
    ]


def _long_chain(m: int) -> List[Site]:
    depth = 2 + m
    path = [(-1, 0, 0), (0, 0, 0), (1, 0, 0), (2, 0, 0)]
    path += [(2, 0, -z) for z in range(1, depth + 1)]
    path += [(x, 0, -depth) for x in range(1, -3, -1)]
    path += [(-2, 0, -z) for z in range(depth - 1, -1, -1)]
    return path


def intended_embedding(m: int = 0) -> Embedding:
    """
    Three 8-rings around the x axis at x = -1, 0, 1 and the long chain whose
    three 2s sit on the axis inside them. The long chain runs around the
    rectangle with corners (-2,0,0), (2,0,0), (-2,0,-2-m), (2,0,-2-m).
    """
    words = multiset_M(m)
    chains = [Chain(word=words[i], sites=_ring(x)) for i, x in enumerate((-1, 0, 1))]
    chains.append(Chain(word=words[3], sites=_long_chain(m)))
    return Embedding(chains=chains)


def contribution_counts(e: Embedding, h: HydroLevels) -> Dict[int, int]:
    """How many contacts carry each nonzero value"""
    counts: Dict[int, int] = {}
    for _, value in contributions(e, h):
        counts[value] = counts.get(value, 0) + 1
    return dict(sorted(counts.items()))


def zero_parity_classes(e: Embedding) -> List[ParityClass]:
    """Coordinate-sum parities of the zero sites of each chain that has zeros"""
    classes = []
    for ci, chain in enumerate(e.chains):
        parities = sorted({coordinate_parity(s) for s, letter in zip(chain.sites, chain.word.letters) if letter == "0"})
        if parities:
            classes.append(ParityClass(chain=ci, word=chain.word, zero_parities=parities))
    return classes


def chain_from_word(word: Word, sites: List[Site]) -> Chain:
    """A closed chain of the word's letters read cyclically, placed on the given sites"""
    return Chain(word=Word(letters=word.letters, cyclic=True), sites=[tuple(s) for s in sites])
