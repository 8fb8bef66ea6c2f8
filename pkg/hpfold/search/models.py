from typing import List, Optional, Tuple

from pydantic import BaseModel, Field, field_validator

from hpfold.config import settings
from hpfold.folding import Fold
from hpfold.lattice import LatticeKind, Site
from hpfold.words import Word


class SearchLimits(BaseModel):
    """Node and wall-clock budget for one search, and how many worker processes to use"""
    max_nodes: int = Field(default_factory=lambda: settings.SEARCH_MAX_NODES)
    max_seconds: float = Field(default_factory=lambda: settings.SEARCH_MAX_SECONDS)
    workers: int = Field(default_factory=lambda: settings.SEARCH_WORKERS)

    @field_validator("max_nodes", "max_seconds", "workers")
    @classmethod
    def _positive(cls, value):
        if value <= 0:
            raise ValueError("search limits must be positive")
        return value


class SearchResult(BaseModel):
    """J value with its witness; exact is False when the budget ran out first"""
    kind: LatticeKind
    word: Word
    closed: bool = False
    value: int
    witness: Optional[Fold] = None
    exact: bool = True
    nodes: int = 0
    elapsed_seconds: float = 0.0


class IsoResult(BaseModel):
    """Most internal edges over connected n-site sets, with the maximisers up to congruence"""
    kind: LatticeKind
    n: int
    max_internal_edges: int
    witnesses: List[Tuple[Site, ...]] = Field(default_factory=list)
    sets_examined: int = 0

    @property
    def unique(self) -> bool:
        return len(self.witnesses) == 1


class BallSquareReport(BaseModel):
    ball_radius: int
    ball_sites: int
    ball_edges: int
    square_side: int
    square_sites: int
    square_edges: int

    @property
    def square_wins(self) -> bool:
        return self.ball_sites == self.square_sites and self.square_edges > self.ball_edges


class DaisyCheck(BaseModel):
    radius: int
    n: int
    formula_edges: int
    search_edges: int
    unique: bool
    daisy_is_witness: bool

    @property
    def ok(self) -> bool:
        return self.formula_edges == self.search_edges and self.unique and self.daisy_is_witness


class PrefixAgreement(BaseModel):
    """Exact J of one prefix word next to the restricted witness fold and the bound"""
    length: int
    value: int
    fold_score: int
    bound: int
    certified: bool  # the restricted fold meets the bound

    @property
    def ok(self) -> bool:
        return self.fold_score <= self.value <= self.bound and (not self.certified or self.value == self.fold_score)


class AgreementReport(BaseModel):
    """
    Exact search against an equality certificate. When the full search runs out
    of budget the prefix words stand in for it; the certificate is exact either way.
    """
    kind: LatticeKind
    word: Word
    certified_value: int
    certificate_accepted: bool
    exact_value: Optional[int] = None
    search_nodes: int = 0
    prefixes: List[PrefixAgreement] = Field(default_factory=list)

    @property
    def exact(self) -> bool:
        return self.exact_value is not None

    @property
    def value(self) -> Optional[int]:
        if self.exact:
            return self.exact_value
        return self.certified_value if self.certificate_accepted else None

    @property
    def prefixes_agree(self) -> bool:
        return all(p.ok for p in self.prefixes)

    @property
    def ok(self) -> bool:
        if not self.certificate_accepted or not self.prefixes_agree:
            return False
        return not self.exact or self.exact_value == self.certified_value
