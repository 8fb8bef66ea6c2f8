"""
Data models for closed-chain embeddings in the cubic lattice
"""
from enum import Enum
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, field_validator

from hpfold.errors import InputError
from hpfold.lattice import Site
from hpfold.words import ALPHABET, Word


class Chain(BaseModel):
    """A cyclic word and the site of each of its letters"""
    word: Word
    sites: List[Site]

    @field_validator("word")
    @classmethod
    def _cyclic(cls, value: Word) -> Word:
        return value if value.cyclic else Word(letters=value.letters, cyclic=True)

    def __len__(self) -> int:
        return len(self.word)


class Embedding(BaseModel):
    """A multiset of closed chains placed in Z^3"""
    chains: List[Chain] = Field(default_factory=list)

    def occupancy(self) -> Dict[Site, Tuple[int, int]]:
        """site -> (chain index, word index); later chains win on overlap"""
        return {s: (ci, i) for ci, chain in enumerate(self.chains) for i, s in enumerate(chain.sites)}

    def letter_at(self, site: Site) -> Optional[str]:
        hit = self.occupancy().get(site)
        if hit is None:
            return None
        return self.chains[hit[0]].word[hit[1]]


class HydroLevels(BaseModel):
    """Hydrophobicity level of each letter; a contact scores h(a)+h(b) when both are nonzero"""
    h: Dict[str, int]

    @field_validator("h")
    @classmethod
    def _levels(cls, value: Dict[str, int]) -> Dict[str, int]:
        if set(value) != set(ALPHABET):
            raise ValueError(f"levels must be given for exactly {list(ALPHABET)}")
        if any(v < 0 for v in value.values()):
            raise ValueError("levels must be nonnegative")
        return value

    @classmethod
    def standard(cls, c: int) -> "HydroLevels":
        """h_c: 0 -> 1, 1 -> 0, 2 -> c"""
        if c < 0:
            raise InputError(f"c must be nonnegative, got {c}")
        return cls(h={"0": 1, "1": 0, "2": c})


class EmbeddingViolationKind(str, Enum):
    LENGTH_MISMATCH = "length_mismatch"
    NOT_INJECTIVE = "not_injective"
    BAD_STEP = "bad_step"
    OVERLAP = "overlap"


class EmbeddingViolation(BaseModel):
    kind: EmbeddingViolationKind
    detail: str
    chain: int
    indices: List[int] = Field(default_factory=list)


class EmbeddingReport(BaseModel):
    violations: List[EmbeddingViolation] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        if self.ok:
            return "ok"
        return "; ".join(f"{v.kind.value} (chain {v.chain}): {v.detail}" for v in self.violations)


class TripleShape(str, Enum):
    STRAIGHT = "straight"
    BENT = "bent"


class RingHypothesis(str, Enum):
    """Which ring sites must touch the middle of the triple"""
    EVEN_INDEX = "even"  # some zero (even word index) is adjacent to the origin
    ANY_INDEX = "any"
    NONE = "none"


class RingPlacementReport(BaseModel):
    hypothesis: RingHypothesis
    solutions: List[List[Site]] = Field(default_factory=list)
    images: List[Tuple[Site, ...]] = Field(default_factory=list)
    expected_image: Tuple[Site, ...]

    @property
    def all_match(self) -> bool:
        return bool(self.solutions) and self.images == [self.expected_image]


class LevelsAudit(BaseModel):
    """Scores an embedding with x fewer c-contributions could reach, against the intended score"""
    x: int
    c: int
    straight_value: int
    bent_value: int
    intended_value: int
    threshold_holds: bool  # (c+1) x > 8 + 2x

    @property
    def straight_strict(self) -> bool:
        return self.straight_value < self.intended_value

    @property
    def bent_strict(self) -> bool:
        return self.bent_value < self.intended_value

    @property
    def strict(self) -> bool:
        return self.straight_strict and self.bent_strict


class ParityClass(BaseModel):
    chain: int
    word: Word
    zero_parities: List[int] = Field(default_factory=list)

    @property
    def single_class(self) -> bool:
        return len(set(self.zero_parities)) <= 1
