"""
Exact search checked against an equality certificate, with prefix words as
the fallback when the full word is beyond the search budget.
"""
import logging
from typing import Optional

from hpfold.bounds import certify_equality, upper_bound
from hpfold.errors import BudgetExceeded, InputError
from hpfold.folding import Fold, drop_ends, score
from hpfold.lattice import LatticeKind
from hpfold.search.engine import optimal
from hpfold.search.models import AgreementReport, PrefixAgreement, SearchLimits
from hpfold.words import Word

logger = logging.getLogger(__name__)

DEFAULT_MAX_PREFIX = 16


def search_certificate_agreement(kind, w: Word, fold: Fold, max_prefix: int = DEFAULT_MAX_PREFIX,
                                 limits: Optional[SearchLimits] = None) -> AgreementReport:
    """
    Compare exact J with a certified fold of w.

    The full word is searched with the certified score as a floor. Every
    prefix word of length 2..max_prefix is searched too and must sit between
    the score of the restricted fold and its upper bound, meeting the fold
    score wherever the restricted fold is itself certified.

    Args:
        kind: lattice
        w: a linear word over {0,1}
        fold: an open fold of w
        max_prefix: longest prefix word searched
        limits: budget for each search

    Returns:
        AgreementReport; exact_value is None when the full search ran out

    Raises:
        BudgetExceeded: a prefix search ran out of budget
    """
    kind = LatticeKind(kind)
    if w.cyclic or fold.closed:
        raise InputError("Prefix agreement applies to open folds of linear words")
    if max_prefix < 2:
        raise InputError(f"max_prefix must be at least 2, got {max_prefix}")
    limits = limits or SearchLimits()
    cert = certify_equality(kind, w, fold)
    report = AgreementReport(
        kind=kind,
        word=w,
        certified_value=cert.score,
        certificate_accepted=cert.accepted,
    )

    try:
        result = optimal(kind, w, limits=limits, lower_bound=cert.score)
        report.exact_value = result.value
        report.search_nodes = result.nodes
    except BudgetExceeded as e:
        logger.warning(f"Full search of {w} ran out of budget; checking prefix words up to {max_prefix}")
        report.search_nodes = e.result.nodes if e.result is not None else 0

    n = len(w)
    for length in range(2, min(max_prefix, n - 1) + 1):
        sub_fold, sub_word = drop_ends(fold, w, 0, n - length)
        report.prefixes.append(PrefixAgreement(
            length=length,
            value=optimal(kind, sub_word, limits=limits).value,
            fold_score=score(sub_fold, sub_word),
            bound=upper_bound(kind, sub_word),
            certified=certify_equality(kind, sub_word, sub_fold).accepted,
        ))

    bad = [p.length for p in report.prefixes if not p.ok]
    if bad:
        logger.error(f"Search and certificate disagree on prefixes of {w} of lengths {bad}")
    logger.info(
        f"Agreement on {w}: value {report.value} ({'exact search' if report.exact else 'certificate'}), "
        f"{len(report.prefixes)} prefixes, ok={report.ok}"
    )
    return report
