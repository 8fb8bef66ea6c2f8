"""
Search-free certificates: a witness fold's score compared against an upper bound.

An equality certificate pins J(w) down exactly. A drop certificate shows that
an extended word (1w1, or w followed by a suffix) has a bound strictly below
a score that w attains, so J is not monotone under that extension. A lifted
drop carries a drop on x over to 1^m x.
"""
import logging
from enum import Enum
from typing import List, Optional, Tuple

from pydantic import BaseModel

from hpfold.bounds.bounds import best_bound, bound_name, upper_bound
from hpfold.bounds.monotone import Oracle, default_oracle
from hpfold.errors import InputError, VerificationError
from hpfold.folding import Fold, fold_from_sites, require_valid, score, sites
from hpfold.lattice import LatticeKind, Site, apply_move, get_spec
from hpfold.words import Word

logger = logging.getLogger(__name__)

EXACT_SEARCH = "exact-search"


class ClaimKind(str, Enum):
    EQUALITY = "equality"  # J(w) = v
    WRAP_DROP = "wrap_drop"  # J(1w1) < J(w)
    SUFFIX_DROP = "suffix_drop"  # J(w.suffix) < J(w)
    LIFTED_DROP = "lifted_drop"  # J(1^m x 1) < J(1^m x)


class Certificate(BaseModel):
    """
    A replayable claim. `score` is what `fold` achieves on `word`; `bound_value`
    bounds J of `extended_word` (or of `word` itself for equality).
    """
    claim: ClaimKind
    kind: LatticeKind
    word: Word
    fold: Fold
    score: int
    bound_used: str
    bound_value: int
    extended_word: Optional[Word] = None
    base_word: Optional[Word] = None  # x, for a lifted drop on 1^m x
    accepted: bool
    gap: int = 0
    detail: str = ""

    def statement(self) -> str:
        if self.claim == ClaimKind.EQUALITY:
            return f"J_{self.kind.value}({self.word}) = {self.score}"
        if self.claim == ClaimKind.LIFTED_DROP:
            j = f"J_{self.kind.value}"
            return (
                f"{j}({self.extended_word}) <= {j}({self.base_word}1) <= {self.bound_value} "
                f"< {self.score} <= {j}({self.word})"
            )
        return f"J_{self.kind.value}({self.extended_word}) <= {self.bound_value} < {self.score} <= J_{self.kind.value}({self.word})"


def certify_equality(kind, w: Word, fold: Fold) -> Certificate:
    """
    Accept iff the fold's score meets the unwrapped upper bound.

    A rejected certificate records the gap between bound and score.
    """
    kind = LatticeKind(kind)
    if fold.kind != kind:
        raise InputError(f"Fold is on {fold.kind.value}, certificate asked for {kind.value}")
    require_valid(fold, w)
    value = score(fold, w)
    bound = upper_bound(kind, w, wrapped=False)
    if value > bound:
        raise VerificationError(f"Score {value} exceeds the {bound_name(kind)} bound {bound}")
    accepted = value == bound
    cert = Certificate(
        claim=ClaimKind.EQUALITY,
        kind=kind,
        word=w,
        fold=fold,
        score=value,
        bound_used=bound_name(kind, wrapped=False),
        bound_value=bound,
        accepted=accepted,
        gap=bound - value,
        detail="score meets bound" if accepted else f"score {value} is {bound - value} below bound {bound}",
    )
    logger.info(f"Equality certificate for {w}: {'accepted' if accepted else 'rejected'} ({value}/{bound})")
    return cert


def certify_wrap_drop(kind, w: Word, fold: Fold) -> Certificate:
    """J(1w1) <= wrapped bound < score = J(w); needs an accepted equality first"""
    equality = certify_equality(kind, w, fold)
    kind = equality.kind
    wrapped = upper_bound(kind, w, wrapped=True)
    extended = Word(letters="1" + w.letters + "1", cyclic=w.cyclic)
    if not equality.accepted:
        accepted, detail = False, f"equality not certified: {equality.detail}"
    elif wrapped < equality.score:
        accepted, detail = True, f"wrapped bound {wrapped} < {equality.score}"
    else:
        accepted, detail = False, f"inequality not strict: wrapped bound {wrapped} >= {equality.score}"
    logger.info(f"Wrap-drop certificate for {w}: {'accepted' if accepted else 'rejected'}")
    return Certificate(
        claim=ClaimKind.WRAP_DROP,
        kind=kind,
        word=w,
        fold=fold,
        score=equality.score,
        bound_used=bound_name(kind, wrapped=True),
        bound_value=wrapped,
        extended_word=extended,
        accepted=accepted,
        gap=wrapped - equality.score,
        detail=detail,
    )


def certify_suffix_drop(kind, w: Word, fold: Fold, suffix: str = "1") -> Certificate:
    """
    J(w.suffix) < J(w), from the best bound on w.suffix against the fold's score.

    Only the score is needed on the left side, since J(w) >= score(fold).
    """
    kind = LatticeKind(kind)
    if w.cyclic:
        raise InputError("Suffix extension applies to linear words")
    require_valid(fold, w)
    value = score(fold, w)
    extended = Word.parse(w.letters + suffix)
    bound, name = best_bound(kind, extended, wrapped=False)
    accepted = bound < value
    return Certificate(
        claim=ClaimKind.SUFFIX_DROP,
        kind=kind,
        word=w,
        fold=fold,
        score=value,
        bound_used=name,
        bound_value=bound,
        extended_word=extended,
        accepted=accepted,
        gap=bound - value,
        detail=f"bound {bound} on {extended} {'<' if accepted else '>='} score {value}",
    )


def replay(cert: Certificate) -> bool:
    """Recompute a certificate from its word and fold and compare verdicts"""
    if cert.claim == ClaimKind.LIFTED_DROP:
        value = score(cert.fold, cert.word)
        bound, _ = _drop_bound(cert.kind, cert.base_word, value)
        return (
            cert.word.letters.endswith(cert.base_word.letters)
            and value == cert.score
            and bound == cert.bound_value
            and (bound < value) == cert.accepted
        )
    if cert.claim == ClaimKind.EQUALITY:
        again = certify_equality(cert.kind, cert.word, cert.fold)
    elif cert.claim == ClaimKind.WRAP_DROP:
        again = certify_wrap_drop(cert.kind, cert.word, cert.fold)
    else:
        suffix = cert.extended_word.letters[len(cert.word):]
        again = certify_suffix_drop(cert.kind, cert.word, cert.fold, suffix)
    return again.accepted == cert.accepted and again.score == cert.score and again.bound_value == cert.bound_value


def _drop_bound(kind: LatticeKind, x: Word, value: int, oracle: Optional[Oracle] = None) -> Tuple[int, str]:
    """An upper bound on J(x1): the best closed-form bound if it is below value, else J(x1) itself"""
    x1 = Word(letters=x.letters + "1")
    bound, name = best_bound(kind, x1)
    if bound < value:
        return bound, name
    oracle = oracle or default_oracle()
    return oracle(kind, x1), EXACT_SEARCH


def _extend_start(kind: LatticeKind, x: Word, fold: Fold, m: int, value: int,
                  max_reroute: int, max_nodes: int) -> Optional[Fold]:
    """
    A fold of 1^m x scoring at least value. Sites r.. of the given fold stay
    put; the first r letters of x are placed again, followed outward by the
    m ones, trying r = 0, 1, .. max_reroute in turn.
    """
    alphabet = get_spec(kind).alphabet
    placed = sites(fold)
    lifted = Word(letters="1" * m + x.letters)
    budget = max_nodes

    def grow(path: List[Site], used: set, keep: List[Site], length: int) -> Optional[Fold]:
        nonlocal budget
        if len(path) == length:
            candidate = fold_from_sites(kind, path[::-1] + keep)
            return candidate if score(candidate, lifted) >= value else None
        current = path[-1] if path else keep[0]
        for letter in alphabet:
            budget -= 1
            if budget < 0:
                return None
            nxt = apply_move(kind, current, letter)
            if nxt in used:
                continue
            used.add(nxt)
            path.append(nxt)
            found = grow(path, used, keep, length)
            if found is not None:
                return found
            path.pop()
            used.discard(nxt)
        return None

    for r in range(min(max_reroute, len(x) - 1) + 1):
        keep = placed[r:]
        found = grow([], set(keep), keep, r + m)
        if found is not None:
            logger.debug(f"Extended {x} to 1^{m} {x} re-placing {r} sites")
            return found
        if budget < 0:
            logger.warning(f"Extension search for 1^{m} {x} ran out of its {max_nodes} node budget")
            break
    return None


def lift_counterexample(kind, x: Word, fold: Fold, m: int, max_nodes: int = 100_000,
                        max_reroute: int = 4, oracle: Optional[Oracle] = None) -> Certificate:
    """
    Lift J(x1) < J(x) to J(1^m x 1) < J(1^m x).

    The fold's score must beat J(x1), taken from the closed-form bounds or,
    when those are not strict, from the exact solver. A fold of 1^m x keeping
    that score is then searched for near the fold start. With both in hand,
    J(1^m x 1) <= J(x1) < score <= J(1^m x) by suffix monotonicity.

    Args:
        kind: lattice
        x: the base word
        fold: a fold of x
        m: number of leading ones to add
        max_nodes: budget for the extension search
        max_reroute: most leading sites of the fold that may be moved
        oracle: exact J, defaults to the branch-and-bound solver

    Returns:
        An accepted lifted-drop certificate on 1^m x

    Raises:
        VerificationError: J(x1) is not below the fold's score, or no fold
            of 1^m x keeping the score was found
    """
    kind = LatticeKind(kind)
    if m < 0:
        raise InputError(f"m must be nonnegative, got {m}")
    if x.cyclic:
        raise InputError("Suffix extension applies to linear words")
    require_valid(fold, x)
    if fold.closed:
        raise InputError("Only open folds can be extended")

    value = score(fold, x)
    bound, name = _drop_bound(kind, x, value, oracle)
    if bound >= value:
        raise VerificationError(f"J({x}1) <= {bound} is not below the fold score {value}")

    lifted_fold, lifted_word = fold, x
    if m > 0:
        lifted_fold = _extend_start(kind, x, fold, m, value, max_reroute, max_nodes)
        if lifted_fold is None:
            raise VerificationError(
                f"No fold of 1^{m} {x} keeping score {value} found re-placing up to {max_reroute} sites"
            )
        lifted_word = Word(letters="1" * m + x.letters)

    lifted_score = score(lifted_fold, lifted_word)
    cert = Certificate(
        claim=ClaimKind.LIFTED_DROP,
        kind=kind,
        word=lifted_word,
        fold=lifted_fold,
        score=lifted_score,
        bound_used=name,
        bound_value=bound,
        extended_word=Word(letters=lifted_word.letters + "1"),
        base_word=x,
        accepted=True,
        gap=bound - lifted_score,
        detail=f"J({x}1) <= {bound} < {lifted_score}",
    )
    logger.info(f"Lifted strict drop to 1^{m} {x}: {cert.statement()}")
    return cert
