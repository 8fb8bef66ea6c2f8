"""
Check handlers. Each one loads what its entry refers to, computes every value
named in the entry's `expect` block and returns them; the runner compares.
"""
import logging
from pathlib import Path
from typing import Any, Callable, Dict

from hpfold.bounds import (
    certify_equality,
    certify_suffix_drop,
    certify_wrap_drop,
    lift_counterexample,
    monotone_sweep,
    upper_bound,
)
from hpfold.corpus.models import CorpusEntry
from hpfold.errors import InputError, VerificationError
from hpfold.folding import (
    decode_catalog_entry,
    induced_edge_sum,
    read_fold_file,
    score,
    zero_set_edges,
    zeros_fill_cube,
)
from hpfold.lattice import LatticeKind
from hpfold.multichain import (
    HydroLevels,
    RingHypothesis,
    embedding_score,
    enumerate_ring_placements,
    intended_embedding,
    intended_score,
    levels_bound_audit,
    read_embedding_file,
    validate_embedding,
)
from hpfold.search import (
    DEFAULT_MAX_PREFIX,
    SearchLimits,
    ball_vs_square_report,
    daisy_report,
    max_internal_edges,
    optimal,
    search_certificate_agreement,
)
from hpfold.topology import ClosedCurve, fox3_count_curve, linking_number
from hpfold.words import Word, occurrences, zeros

logger = logging.getLogger(__name__)

Metrics = Dict[str, Callable[[], Any]]


def _measure(entry: CorpusEntry, metrics: Metrics) -> Dict[str, Any]:
    unknown = sorted(set(entry.expect) - set(metrics))
    if unknown:
        raise InputError(f"Entry {entry.id}: no {entry.check.value} metric named {unknown}")
    return {key: metrics[key]() for key in entry.expect}


def _path(entry: CorpusEntry, base: Path) -> Path:
    if not entry.file:
        raise InputError(f"Entry {entry.id} needs a file")
    return base / entry.file


def check_fold(entry: CorpusEntry, base: Path) -> Dict[str, Any]:
    fold, word = read_fold_file(_path(entry, base))
    kind = fold.kind
    side = entry.expect.get("zero_cube")

    def fox3() -> int:
        return fox3_count_curve(ClosedCurve.from_fold(fold))

    def lift() -> bool:
        try:
            return lift_counterexample(kind, word, fold, entry.params.get("m", 1)).accepted
        except VerificationError as e:
            logger.info(f"Entry {entry.id}: no lift ({e.detail})")
            return False

    return _measure(entry, {
        "length": lambda: len(word),
        "zeros": lambda: zeros(word),
        "score": lambda: score(fold, word),
        "bound": lambda: upper_bound(kind, word),
        "i00_plus_score": lambda: occurrences("00", word) + score(fold, word),
        "induced_matches_zero_set": lambda: induced_edge_sum(fold, word) == zero_set_edges(fold, word),
        "equality": lambda: certify_equality(kind, word, fold).accepted,
        "wrap_drop": lambda: certify_wrap_drop(kind, word, fold).accepted,
        "suffix_drop": lambda: certify_suffix_drop(kind, word, fold).accepted,
        "lift": lift,
        "zero_cube": lambda: side if zeros_fill_cube(fold, word, side) else None,
        "fox3": fox3,
    })


def _zero_box(embedding) -> Any:
    """Bounding box of the zero sites as [[lo, hi]] * 3 if they fill it, else None"""
    pts = [s for chain in embedding.chains for s, letter in zip(chain.sites, chain.word.letters) if letter == "0"]
    if not pts:
        return None
    box = [[min(p[i] for p in pts), max(p[i] for p in pts)] for i in range(3)]
    volume = 1
    for lo, hi in box:
        volume *= hi - lo + 1
    return box if volume == len(set(pts)) else None


def check_embedding(entry: CorpusEntry, base: Path) -> Dict[str, Any]:
    embedding = read_embedding_file(_path(entry, base))

    def curves():
        return [ClosedCurve(vertices=tuple(chain.sites)) for chain in embedding.chains]

    def linking() -> int:
        first, second = curves()[:2]
        return linking_number(first, second)

    return _measure(entry, {
        "valid": lambda: validate_embedding(embedding).ok,
        "lengths": lambda: [len(chain) for chain in embedding.chains],
        "sites": lambda: len(embedding.occupancy()),
        "linking": linking,
        "abs_linking": lambda: abs(linking()),
        "zero_box": lambda: _zero_box(embedding),
        "score": lambda: embedding_score(embedding, HydroLevels.standard(entry.params.get("c", 10))),
    })


def check_intended_embedding(entry: CorpusEntry, base: Path) -> Dict[str, Any]:
    m = entry.params.get("m", 0)
    c = entry.params.get("c", 10)
    embedding = intended_embedding(m)
    return _measure(entry, {
        "valid": lambda: validate_embedding(embedding).ok,
        "score": lambda: embedding_score(embedding, HydroLevels.standard(c)),
        "intended_score": lambda: intended_score(c),
    })


def check_isoperimetry(entry: CorpusEntry, base: Path) -> Dict[str, Any]:
    result = max_internal_edges(LatticeKind(entry.params["lattice"]), entry.params["n"])
    return _measure(entry, {
        "max": lambda: result.max_internal_edges,
        "unique": lambda: result.unique,
    })


def check_ball_square(entry: CorpusEntry, base: Path) -> Dict[str, Any]:
    report = ball_vs_square_report(entry.params.get("radius", 3), entry.params.get("side", 5))
    return _measure(entry, {
        "ball_sites": lambda: report.ball_sites,
        "ball_edges": lambda: report.ball_edges,
        "square_edges": lambda: report.square_edges,
        "square_wins": lambda: report.square_wins,
    })


def check_daisy(entry: CorpusEntry, base: Path) -> Dict[str, Any]:
    report = daisy_report(entry.params["radius"])
    return _measure(entry, {
        "edges": lambda: report.search_edges,
        "ok": lambda: report.ok,
    })


def check_levels_audit(entry: CorpusEntry, base: Path) -> Dict[str, Any]:
    audit = levels_bound_audit(entry.params["x"], entry.params["c"], strict_from=None)
    return _measure(entry, {
        "strict": lambda: audit.strict,
        "straight_value": lambda: audit.straight_value,
        "bent_value": lambda: audit.bent_value,
        "intended_value": lambda: audit.intended_value,
    })


def check_ring_lemma(entry: CorpusEntry, base: Path) -> Dict[str, Any]:
    hypothesis = RingHypothesis(entry.params.get("hypothesis", RingHypothesis.EVEN_INDEX.value))
    report = enumerate_ring_placements(hypothesis=hypothesis)
    return _measure(entry, {
        "solutions": lambda: len(report.solutions),
        "images": lambda: len(report.images),
        "all_match": lambda: report.all_match,
    })


def check_decode(entry: CorpusEntry, base: Path) -> Dict[str, Any]:
    result = decode_catalog_entry(entry.params["name"])
    closed = entry.params.get("closed", False)
    fold = result.fold_for(result.canonical, closed=closed)
    return _measure(entry, {
        "mappings": lambda: len(result.mappings),
        "moves": lambda: fold.moves,
    })


def check_search(entry: CorpusEntry, base: Path) -> Dict[str, Any]:
    word = Word.parse(entry.params["word"])
    result = optimal(LatticeKind(entry.params["lattice"]), word, closed=entry.params.get("closed", False))
    return _measure(entry, {
        "value": lambda: result.value,
        "witness": lambda: result.witness.moves if result.witness else None,
    })


def check_search_agreement(entry: CorpusEntry, base: Path) -> Dict[str, Any]:
    fold, word = read_fold_file(_path(entry, base))
    limits = SearchLimits(max_nodes=entry.params["max_nodes"]) if "max_nodes" in entry.params else None
    report = search_certificate_agreement(
        fold.kind, word, fold, max_prefix=entry.params.get("max_prefix", DEFAULT_MAX_PREFIX), limits=limits
    )
    return _measure(entry, {
        "value": lambda: report.value,
        "exact": lambda: report.exact,
        "prefixes_agree": lambda: report.prefixes_agree,
        "prefixes_checked": lambda: len(report.prefixes),
        "ok": lambda: report.ok,
    })


def check_monotone(entry: CorpusEntry, base: Path) -> Dict[str, Any]:
    report = monotone_sweep(LatticeKind(entry.params["lattice"]), entry.params["max_len"])
    return _measure(entry, {
        "violations": lambda: len(report.violations),
        "words_checked": lambda: report.words_checked,
    })


DEFAULT_HANDLERS = {
    "fold": check_fold,
    "embedding": check_embedding,
    "intended_embedding": check_intended_embedding,
    "isoperimetry": check_isoperimetry,
    "ball_square": check_ball_square,
    "daisy": check_daisy,
    "levels_audit": check_levels_audit,
    "ring_lemma": check_ring_lemma,
    "decode": check_decode,
    "search": check_search,
    "search_agreement": check_search_agreement,
    "monotone": check_monotone,
}
