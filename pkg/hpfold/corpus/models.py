from datetime import datetime, timezone
from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field


class CheckKind(str, Enum):
    """What a corpus entry asserts"""
    FOLD = "fold"
    EMBEDDING = "embedding"
    INTENDED_EMBEDDING = "intended_embedding"
    ISOPERIMETRY = "isoperimetry"
    BALL_SQUARE = "ball_square"
    DAISY = "daisy"
    LEVELS_AUDIT = "levels_audit"
    RING_LEMMA = "ring_lemma"
    DECODE = "decode"
    SEARCH = "search"
    SEARCH_AGREEMENT = "search_agreement"
    MONOTONE = "monotone"


class CorpusEntry(BaseModel):
    """One construction or computation with the values it must reproduce"""
    id: str
    check: CheckKind
    file: Optional[str] = None
    params: Dict[str, Any] = Field(default_factory=dict)
    expect: Dict[str, Any] = Field(default_factory=dict)
    slow: bool = False
    note: str = ""


class CheckResult(BaseModel):
    """Outcome of running one entry"""
    entry_id: str
    check: CheckKind
    success: bool
    data: Optional[Dict[str, Any]] = None
    error: Optional[str] = None
    metadata: Dict[str, Any] = Field(default_factory=dict)
    processing_time_ms: Optional[float] = None
    timestamp: datetime = Field(default_factory=lambda: datetime.now(timezone.utc))


class CorpusReport(BaseModel):
    results: List[CheckResult] = Field(default_factory=list)
    skipped: List[str] = Field(default_factory=list)

    @property
    def failures(self) -> List[CheckResult]:
        return [r for r in self.results if not r.success]

    @property
    def ok(self) -> bool:
        return not self.failures
