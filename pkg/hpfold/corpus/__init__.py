from .models import CheckKind, CheckResult, CorpusEntry, CorpusReport
from .runner import MANIFEST, CorpusRunner

__all__ = [
    "CheckKind",
    "CheckResult",
    "CorpusEntry",
    "CorpusReport",
    "MANIFEST",
    "CorpusRunner",
]
