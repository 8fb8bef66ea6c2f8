"""
Exact branch-and-bound over symmetry-canonical move strings.

Moves are tried in alphabet order and the incumbent is only replaced on a
strict improvement, so the first optimal string found is the lexicographically
least optimal canonical string.
"""
import logging
import time
from typing import Dict, List, Optional, Sequence, Tuple

from hpfold.bounds.bounds import best_bound
from hpfold.errors import InputError
from hpfold.folding import Fold
from hpfold.lattice import (
    LatticeKind,
    ORIGIN,
    Site,
    distance_lower_bound,
    get_spec,
    letter_permutations,
)
from hpfold.search.models import SearchLimits
from hpfold.words import Word, internal_zero_capacity

logger = logging.getLogger(__name__)

SYNC_INTERVAL = 1024  # nodes between clock and shared-bound checks


class OutOfBudget(Exception):
    pass


class SharedBound:
    """Cross-process view of the best value found so far; it only ever increases"""

    def __init__(self, best, nodes, lock, max_nodes: int):
        self.best = best
        self.nodes = nodes
        self.lock = lock
        self.max_nodes = max_nodes

    def read(self) -> int:
        return self.best.value

    def offer(self, value: int) -> None:
        with self.lock:
            if value > self.best.value:
                self.best.value = value

    def charge(self, count: int) -> bool:
        """Add to the global node count; False once the budget is spent"""
        with self.lock:
            self.nodes.value += count
            return self.nodes.value <= self.max_nodes


class FoldSolver:
    """
    Depth-first search for the maximum score of a {0,1} word.

    Args:
        kind: lattice
        w: the word
        closed: search closed folds (the word is read cyclically)
        limits: node and time budget
    """

    def __init__(self, kind, w: Word, closed: bool = False, limits: Optional[SearchLimits] = None):
        self.kind = LatticeKind(kind)
        self.spec = get_spec(self.kind)
        if w.has_level_two():
            raise InputError("Search is defined for words over {0,1}")
        self.closed = closed or w.cyclic
        self.word = Word(letters=w.letters, cyclic=self.closed)
        self.n = len(self.word)
        self.limits = limits or SearchLimits()
        self._check_feasible()

        self.alphabet = self.spec.alphabet
        self.steps = [self.spec.steps[m] for m in self.alphabet]
        self.zero = [c == "0" for c in self.word.letters]
        caps = internal_zero_capacity(self.kind, self.word)
        # capacity of the zeros strictly after index k, split by index parity
        self.cap_after: List[Tuple[int, int]] = [(0, 0)] * (self.n + 1)
        even = odd = 0
        for k in range(self.n - 1, -1, -1):
            self.cap_after[k] = (even, odd)
            if k % 2 == 0:
                even += caps[k]
            else:
                odd += caps[k]
        self.upper, self.upper_name = best_bound(self.kind, self.word)

        if self.kind == LatticeKind.HEX:
            self.perms: List[Tuple[int, ...]] = []
            self.forced = "ll"
        else:
            index = {m: i for i, m in enumerate(self.alphabet)}
            self.perms = [
                tuple(index[p[m]] for m in self.alphabet)
                for p in letter_permutations(self.kind)
            ]
            self.forced = ""

        self.shared: Optional[SharedBound] = None
        self._reset()

    def _check_feasible(self) -> None:
        if self.closed and self.n < 3:
            raise InputError(f"A closed fold needs at least 3 sites, word has {self.n}")
        if self.closed and self.spec.bipartite and self.n % 2:
            raise InputError(f"No closed fold of odd length {self.n} exists on bipartite {self.kind.value}")

    def _reset(self) -> None:
        self.path: List[Site] = []
        self.moves: List[str] = []
        self.occupied: Dict[Site, int] = {}
        self.slots: Dict[int, int] = {}
        self.open_slots = [0, 0]
        self.contacts = 0
        self.best = -1
        self.best_moves: Optional[str] = None
        self.nodes = 0
        self.unsynced = 0
        self.floor = -1
        self.done = False
        self.target: Optional[int] = None
        self.optima: List[str] = []
        self.started = time.monotonic()

    def _move(self, s: Site, idx: int) -> Site:
        vec = self.steps[idx]
        if vec is None:
            vec = (0, 1, 0) if (s[0] + s[1]) % 2 == 0 else (0, -1, 0)
        return (s[0] + vec[0], s[1] + vec[1], s[2] + vec[2])

    def _neighbors(self, s: Site) -> List[Site]:
        return [self._move(s, idx) for idx in range(len(self.alphabet))]

    def _place(self, s: Site) -> None:
        k = len(self.path)
        gained = 0
        empty = 0
        for t in self._neighbors(s):
            j = self.occupied.get(t)
            if j is None:
                empty += 1
                continue
            if self.zero[j]:
                self.slots[j] -= 1
                self.open_slots[j % 2] -= 1
                if self.zero[k] and j != k - 1 and not (self.closed and k == self.n - 1 and j == 0):
                    gained += 1
        if self.zero[k]:
            self.slots[k] = empty
            self.open_slots[k % 2] += empty
        self.contacts += gained
        self.occupied[s] = k
        self.path.append(s)

    def _unplace(self) -> None:
        s = self.path.pop()
        k = self.occupied.pop(s)
        if self.zero[k]:
            self.open_slots[k % 2] -= self.slots.pop(k)
        for t in self._neighbors(s):
            j = self.occupied.get(t)
            if j is None:
                continue
            if self.zero[j]:
                self.slots[j] += 1
                self.open_slots[j % 2] += 1
                if self.zero[k] and j != k - 1 and not (self.closed and k == self.n - 1 and j == 0):
                    self.contacts -= 1

    def _future_bound(self, k: int) -> int:
        """Admissible bound on contacts still to come with sites 0..k placed"""
        u_even, u_odd = self.cap_after[k]
        unplaced = u_even + u_odd
        if unplaced == 0:
            return 0
        p = list(self.open_slots)
        if k < self.n - 1:
            # the next chain site takes one free slot of the end, and closing takes one of site 0
            if self.zero[k] and self.slots.get(k, 0) > 0:
                p[k % 2] -= 1
            if self.closed and self.zero[0] and self.slots.get(0, 0) > (1 if k == 0 else 0):
                p[0] -= 1
        placed = max(p[0], 0) + max(p[1], 0)
        bound = (unplaced + min(unplaced, placed)) // 2
        if self.spec.bipartite:
            bound = min(
                bound,
                u_even + min(max(p[0], 0), u_odd),
                u_odd + min(max(p[1], 0), u_even),
            )
        return bound

    def _tick(self) -> None:
        self.nodes += 1
        self.unsynced += 1
        if self.shared is None and self.nodes > self.limits.max_nodes:
            raise OutOfBudget()
        if self.unsynced < SYNC_INTERVAL:
            return
        if self.shared is not None:
            if not self.shared.charge(self.unsynced):
                raise OutOfBudget()
            self.floor = self.shared.read()
        self.unsynced = 0
        if time.monotonic() - self.started > self.limits.max_seconds:
            raise OutOfBudget()

    def _closing_move(self) -> Optional[str]:
        end = self.path[-1]
        for idx, m in enumerate(self.alphabet):
            if self._move(end, idx) == ORIGIN:
                return m
        return None

    def _record(self) -> None:
        moves = "".join(self.moves)
        if self.closed:
            closing = self._closing_move()
            if closing is None:
                return
            moves += closing
        if self.target is not None:
            if self.contacts == self.target:
                self.optima.append(moves)
            return
        if self.contacts > self.best:
            self.best = self.contacts
            self.best_moves = moves
            if self.shared is not None:
                self.shared.offer(self.best)
            if self.best >= self.upper:
                self.done = True

    def _pruned(self, bound: int) -> bool:
        if self.target is not None:
            return bound < self.target
        return bound <= self.best or bound < self.floor

    def _allowed(self, k: int, stab: Sequence[Tuple[int, ...]]) -> List[Tuple[int, str, list]]:
        """Moves that keep the string canonical, with the stabiliser after each"""
        out = []
        for idx, m in enumerate(self.alphabet):
            if k < len(self.forced) and m != self.forced[k]:
                continue
            if any(g[idx] < idx for g in stab):
                continue
            out.append((idx, m, [g for g in stab if g[idx] == idx]))
        return out

    def _extend(self, stab: Sequence[Tuple[int, ...]]) -> None:
        self._tick()
        k = len(self.path) - 1
        if k == self.n - 1:
            self._record()
            return
        here = self.path[-1]
        if self.closed and distance_lower_bound(self.kind, here, ORIGIN) > self.n - k:
            return
        if self._pruned(self.contacts + self._future_bound(k)):
            return
        for idx, m, next_stab in self._allowed(k, stab):
            t = self._move(here, idx)
            if t in self.occupied:
                continue
            self._place(t)
            self.moves.append(m)
            self._extend(next_stab)
            self.moves.pop()
            self._unplace()
            if self.done:
                return

    def _replay(self, prefix: str) -> Sequence[Tuple[int, ...]]:
        """Place the origin and the prefix moves; returns the stabiliser after them"""
        self._place(ORIGIN)
        stab: Sequence[Tuple[int, ...]] = self.perms
        for k, m in enumerate(prefix):
            choices = {move: (idx, nxt) for idx, move, nxt in self._allowed(k, stab)}
            if m not in choices:
                raise InputError(f"Prefix {prefix!r} is not canonical")
            idx, next_stab = choices[m]
            t = self._move(self.path[-1], idx)
            if t in self.occupied:
                raise InputError(f"Prefix {prefix!r} is not self-avoiding")
            self._place(t)
            self.moves.append(m)
            stab = next_stab
        return stab

    def run(self, prefix: str = "", floor: int = -1) -> "FoldSolver":
        """
        Search the subtree below a canonical prefix.

        Raises:
            OutOfBudget: when the node or time budget is spent; best and
                best_moves keep the incumbent
        """
        target = self.target
        self._reset()
        self.target = target
        self.floor = floor
        stab = self._replay(prefix)
        self._extend(stab)
        return self

    def canonical_prefixes(self, depth: int) -> List[str]:
        """Every canonical self-avoiding move string of length min(depth, n-2)"""
        depth = max(0, min(depth, self.n - 2))
        self._reset()
        self._place(ORIGIN)
        found: List[str] = []

        def grow(stab) -> None:
            if len(self.moves) == depth:
                found.append("".join(self.moves))
                return
            k = len(self.path) - 1
            for idx, m, next_stab in self._allowed(k, stab):
                t = self._move(self.path[-1], idx)
                if t in self.occupied:
                    continue
                self._place(t)
                self.moves.append(m)
                grow(next_stab)
                self.moves.pop()
                self._unplace()

        grow(self.perms)
        return found

    def witness(self) -> Optional[Fold]:
        if self.best_moves is None:
            return None
        return Fold(kind=self.kind, moves=self.best_moves, closed=self.closed)

    def optimal_folds(self, target: int) -> List[Fold]:
        """All canonical folds scoring exactly target, in lexicographic order"""
        self.target = target
        try:
            self.run()
        finally:
            self.target = None
        return [Fold(kind=self.kind, moves=m, closed=self.closed) for m in self.optima]
