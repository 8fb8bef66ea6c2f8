"""
Suffix monotonicity: J(x1) <= J(x) and J(1x) <= J(x), checked with the exact solver
"""
import itertools
import logging
from typing import Callable, Dict, List, Optional

from pydantic import BaseModel, Field

from hpfold.errors import InputError, VerificationError
from hpfold.lattice import LatticeKind
from hpfold.words import Word

logger = logging.getLogger(__name__)

Oracle = Callable[[LatticeKind, Word], int]


class MonotoneReport(BaseModel):
    kind: LatticeKind
    word: Word
    j_word: int
    j_append: int  # J(x1)
    j_prepend: int  # J(1x)

    @property
    def ok(self) -> bool:
        return self.j_append <= self.j_word and self.j_prepend <= self.j_word


class SweepReport(BaseModel):
    kind: LatticeKind
    max_len: int
    words_checked: int = 0
    solver_calls: int = 0
    violations: List[MonotoneReport] = Field(default_factory=list)


def default_oracle(limits=None) -> Oracle:
    """J via the exact branch-and-bound solver"""
    from hpfold.search import optimal

    def oracle(kind: LatticeKind, w: Word) -> int:
        return optimal(kind, w, closed=False, limits=limits).value

    return oracle


def suffix_monotone_check(kind, x: Word, oracle: Optional[Oracle] = None) -> MonotoneReport:
    """
    Compare J(x) with J(x1) and J(1x).

    Raises:
        VerificationError: if either extension scores higher than x
        BudgetExceeded: if the solver runs out of budget
    """
    kind = LatticeKind(kind)
    if x.cyclic:
        raise InputError("Monotonicity is checked on linear words")
    oracle = oracle or default_oracle()
    report = MonotoneReport(
        kind=kind,
        word=x,
        j_word=oracle(kind, x),
        j_append=oracle(kind, Word(letters=x.letters + "1")),
        j_prepend=oracle(kind, Word(letters="1" + x.letters)),
    )
    if not report.ok:
        logger.error(f"Monotonicity violated on {kind.value} for {x}: {report}")
        raise VerificationError(
            f"J({x}1)={report.j_append}, J(1{x})={report.j_prepend} exceed J({x})={report.j_word}"
        )
    return report


def monotone_sweep(kind, max_len: int, oracle: Optional[Oracle] = None) -> SweepReport:
    """
    Check every binary word of length 1..max_len against its two one-letter
    extensions, solving each word once.
    """
    kind = LatticeKind(kind)
    if max_len < 1:
        raise InputError(f"max_len must be at least 1, got {max_len}")
    oracle = oracle or default_oracle()
    memo: Dict[str, int] = {}
    report = SweepReport(kind=kind, max_len=max_len)

    def solve(letters: str) -> int:
        if letters not in memo:
            memo[letters] = oracle(kind, Word(letters=letters))
            report.solver_calls += 1
        return memo[letters]

    for length in range(1, max_len + 1):
        for bits in itertools.product("01", repeat=length):
            x = "".join(bits)
            check = MonotoneReport(
                kind=kind,
                word=Word(letters=x),
                j_word=solve(x),
                j_append=solve(x + "1"),
                j_prepend=solve("1" + x),
            )
            report.words_checked += 1
            if not check.ok:
                logger.error(f"Monotonicity violated on {kind.value} for {x}")
                report.violations.append(check)

    logger.info(
        f"Monotone sweep {kind.value} up to length {max_len}: "
        f"{report.words_checked} words, {report.solver_calls} solves, {len(report.violations)} violations"
    )
    if report.violations:
        raise VerificationError(f"{len(report.violations)} monotonicity violations on {kind.value}")
    return report
