import json
import logging
import time
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Union

from pydantic import ValidationError

from hpfold.config import settings
from hpfold.corpus.handlers import DEFAULT_HANDLERS
from hpfold.corpus.models import CheckKind, CheckResult, CorpusEntry, CorpusReport
from hpfold.errors import InputError, VerificationError

logger = logging.getLogger(__name__)

MANIFEST = "manifest.json"

Handler = Callable[[CorpusEntry, Path], Dict[str, Any]]


class CorpusRunner:
    """
    Runs every entry of a corpus manifest through the handler registered for
    its check kind. A failing entry is recorded and the run continues.
    """

    def __init__(self, corpus_dir: Optional[Union[str, Path]] = None, register_defaults: bool = True):
        self.corpus_dir = Path(corpus_dir) if corpus_dir else settings.corpus_path
        self.handlers: Dict[str, Handler] = {}
        self.processed_count = 0
        self.error_count = 0
        if register_defaults:
            for check, handler in DEFAULT_HANDLERS.items():
                self.register_handler(check, handler)

    def register_handler(self, check: Union[str, CheckKind], handler: Handler) -> None:
        """Register the handler for one check kind"""
        key = CheckKind(check).value
        if key in self.handlers:
            logger.warning(f"Handler for {key} already registered, replacing")
        self.handlers[key] = handler
        logger.debug(f"Registered handler: {key}")

    def get_handler(self, check: Union[str, CheckKind]) -> Optional[Handler]:
        return self.handlers.get(CheckKind(check).value)

    def list_handlers(self) -> List[str]:
        return list(self.handlers.keys())

    def load_entries(self) -> List[CorpusEntry]:
        """
        Read the manifest.

        Raises:
            InputError: the directory or manifest is missing, malformed or empty
        """
        path = self.corpus_dir / MANIFEST
        if not path.is_file():
            raise InputError(f"No corpus manifest at {path}")
        try:
            raw = json.loads(path.read_text(encoding="utf-8"))
            entries = [CorpusEntry(**item) for item in raw.get("entries", [])]
        except (json.JSONDecodeError, ValidationError, AttributeError, TypeError) as e:
            raise InputError(f"Malformed corpus manifest {path}: {e}")
        if not entries:
            raise InputError(f"Corpus manifest {path} has no entries")
        ids = [e.id for e in entries]
        duplicates = sorted({i for i in ids if ids.count(i) > 1})
        if duplicates:
            raise InputError(f"Duplicate corpus entries: {duplicates}")
        return entries

    def run_entry(self, entry: CorpusEntry) -> CheckResult:
        """Run one entry; every exception becomes a failed result"""
        started = time.perf_counter()
        handler = self.get_handler(entry.check)
        try:
            if handler is None:
                raise InputError(f"No handler for check {entry.check.value}")
            observed = handler(entry, self.corpus_dir)
            mismatches = {
                key: {"expected": expected, "observed": observed.get(key)}
                for key, expected in entry.expect.items()
                if observed.get(key) != expected
            }
            if mismatches:
                raise VerificationError(f"{entry.id}: {mismatches}")
            self.processed_count += 1
            result = CheckResult(entry_id=entry.id, check=entry.check, success=True, data=observed)
        except Exception as e:
            self.error_count += 1
            logger.error(f"Corpus entry {entry.id} failed: {e}")
            result = CheckResult(
                entry_id=entry.id,
                check=entry.check,
                success=False,
                error=str(e),
                metadata={"error_type": type(e).__name__},
            )
        result.processing_time_ms = (time.perf_counter() - started) * 1000
        return result

    def run(self, include_slow: bool = True, only: Optional[List[str]] = None) -> CorpusReport:
        """
        Run the corpus.

        Args:
            include_slow: also run entries marked slow
            only: restrict the run to these entry ids

        Returns:
            One result per entry run, plus the ids skipped
        """
        report = CorpusReport()
        for entry in self.load_entries():
            if (only and entry.id not in only) or (entry.slow and not include_slow):
                report.skipped.append(entry.id)
                continue
            result = self.run_entry(entry)
            report.results.append(result)
            logger.info(f"{entry.id}: {'ok' if result.success else 'FAILED'} ({result.processing_time_ms:.0f} ms)")
        return report

    def get_stats(self) -> Dict[str, Any]:
        """Get runner statistics"""
        return {
            "corpus_dir": str(self.corpus_dir),
            "registered_handlers": len(self.handlers),
            "processed_count": self.processed_count,
            "error_count": self.error_count,
        }
