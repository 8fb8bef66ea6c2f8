"""
Entry points for exact search, single process or over a worker pool.

The pool splits the tree into canonical prefixes. Workers share the best
value found so far and prune branches that cannot reach it; ties are kept
per prefix so the merged witness is the same as a single-process run.
"""
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from multiprocessing import Manager
from typing import List, Optional, Tuple

from hpfold.config import settings
from hpfold.errors import BudgetExceeded, InputError
from hpfold.folding import Fold
from hpfold.lattice import LatticeKind
from hpfold.search.models import SearchLimits, SearchResult
from hpfold.search.solver import FoldSolver, OutOfBudget, SharedBound
from hpfold.words import Word

logger = logging.getLogger(__name__)

TaskOutcome = Tuple[int, Optional[str], int, bool]


def _result(solver: FoldSolver, value: int, moves: Optional[str], nodes: int, exact: bool, started: float) -> SearchResult:
    witness = Fold(kind=solver.kind, moves=moves, closed=solver.closed) if moves is not None else None
    return SearchResult(
        kind=solver.kind,
        word=solver.word,
        closed=solver.closed,
        value=max(value, 0),
        witness=witness,
        exact=exact,
        nodes=nodes,
        elapsed_seconds=time.monotonic() - started,
    )


def _finish(result: SearchResult, floor: int = -1) -> SearchResult:
    if result.exact and floor > 0 and (result.witness is None or result.value < floor):
        raise InputError(f"No fold of {result.word} on {result.kind.value} reaches score {floor}")
    if result.exact and result.witness is None:
        raise InputError(f"No {'closed' if result.closed else 'open'} fold of {result.word} exists on {result.kind.value}")
    if not result.exact:
        logger.warning(f"Search budget exhausted after {result.nodes} nodes; best so far {result.value}")
        raise BudgetExceeded(
            f"Search budget exhausted; J >= {result.value} (inexact)",
            best_value=result.value,
            result=result,
        )
    logger.info(
        f"J_{result.kind.value}({result.word}) = {result.value} "
        f"[{result.witness.moves}] in {result.nodes} nodes, {result.elapsed_seconds:.2f}s"
    )
    return result


def _solve_task(kind: str, letters: str, closed: bool, prefix: str, limits: dict,
                shared_best, shared_nodes, lock) -> TaskOutcome:
    """Worker body: search below one prefix against the shared bound"""
    solver = FoldSolver(kind, Word(letters=letters), closed=closed, limits=SearchLimits(**limits))
    solver.shared = SharedBound(shared_best, shared_nodes, lock, limits["max_nodes"])
    try:
        solver.run(prefix, floor=shared_best.value)
    except OutOfBudget:
        return solver.best, solver.best_moves, solver.nodes, False
    return solver.best, solver.best_moves, solver.nodes, True


def _merge(outcomes: List[TaskOutcome], alphabet: str) -> Tuple[int, Optional[str], int, bool]:
    """Largest value, then the move string first in alphabet order among those reaching it"""
    rank = {letter: i for i, letter in enumerate(alphabet)}

    def key(moves: str) -> List[int]:
        return [rank[c] for c in moves]

    value, moves = -1, None
    for task_value, task_moves, _, _ in outcomes:
        if task_moves is None:
            continue
        if task_value > value or (task_value == value and key(task_moves) < key(moves)):
            value, moves = task_value, task_moves
    nodes = sum(o[2] for o in outcomes)
    exact = all(o[3] for o in outcomes)
    return value, moves, nodes, exact


def _optimal_parallel(solver: FoldSolver, limits: SearchLimits, started: float, floor: int) -> SearchResult:
    prefixes = solver.canonical_prefixes(settings.SEARCH_SPLIT_DEPTH)
    logger.info(f"Splitting search into {len(prefixes)} prefixes over {limits.workers} workers")
    with Manager() as manager:
        shared_best = manager.Value("i", floor)
        shared_nodes = manager.Value("i", 0)
        lock = manager.Lock()
        with ProcessPoolExecutor(max_workers=limits.workers) as pool:
            futures = [
                pool.submit(
                    _solve_task,
                    solver.kind.value,
                    solver.word.letters,
                    solver.closed,
                    prefix,
                    limits.model_dump(),
                    shared_best,
                    shared_nodes,
                    lock,
                )
                for prefix in prefixes
            ]
            outcomes = [f.result() for f in futures]
    value, moves, nodes, exact = _merge(outcomes, solver.alphabet)
    return _result(solver, value, moves, nodes, exact, started)


def optimal(kind, w: Word, closed: bool = False, limits: Optional[SearchLimits] = None,
            lower_bound: Optional[int] = None) -> SearchResult:
    """
    Exact J of w with the least optimal canonical move string as witness.

    Args:
        kind: lattice
        w: word over {0,1}; a cyclic word implies closed
        closed: search closed folds
        limits: budget and worker count, defaults from settings
        lower_bound: a score some fold of w is known to reach; branches that
            cannot reach it are pruned, which leaves the witness unchanged

    Returns:
        SearchResult with exact=True

    Raises:
        BudgetExceeded: carries the best-so-far lower bound and the inexact result
        InputError: bad word, no fold of the requested kind exists, or none
            reaches lower_bound
    """
    limits = limits or SearchLimits()
    started = time.monotonic()
    solver = FoldSolver(LatticeKind(kind), w, closed=closed, limits=limits)
    floor = -1 if lower_bound is None else lower_bound
    if floor > solver.upper:
        raise InputError(f"Lower bound {floor} exceeds the {solver.upper_name} bound {solver.upper}")
    logger.info(f"Searching {solver.kind.value} {'closed' if solver.closed else 'open'} folds of {solver.word}")
    if limits.workers > 1 and solver.n > 3:
        return _finish(_optimal_parallel(solver, limits, started, floor), floor)
    try:
        solver.run(floor=floor)
        exact = True
    except OutOfBudget:
        exact = False
    return _finish(_result(solver, solver.best, solver.best_moves, solver.nodes, exact, started), floor)


def enumerate_optima(kind, w: Word, closed: bool = False, limits: Optional[SearchLimits] = None) -> List[Fold]:
    """All optimal folds up to lattice symmetry, as canonical move strings in order"""
    limits = limits or SearchLimits()
    best = optimal(kind, w, closed=closed, limits=limits)
    solver = FoldSolver(LatticeKind(kind), w, closed=closed, limits=limits)
    try:
        folds = solver.optimal_folds(best.value)
    except OutOfBudget:
        raise BudgetExceeded(
            f"Budget exhausted after {len(solver.optima)} optimal folds",
            best_value=best.value,
            result=best,
        )
    logger.info(f"{len(folds)} optimal folds of {w} scoring {best.value}")
    return folds
