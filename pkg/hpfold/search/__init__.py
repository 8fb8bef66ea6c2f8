from .models import (
    AgreementReport,
    BallSquareReport,
    DaisyCheck,
    IsoResult,
    PrefixAgreement,
    SearchLimits,
    SearchResult,
)
from .solver import FoldSolver, OutOfBudget
from .engine import enumerate_optima, optimal
from .agreement import DEFAULT_MAX_PREFIX, search_certificate_agreement
from .isoperimetry import ISO_MAX_N, ball_vs_square_report, daisy_report, max_internal_edges

__all__ = [
    "AgreementReport",
    "BallSquareReport",
    "DaisyCheck",
    "IsoResult",
    "PrefixAgreement",
    "SearchLimits",
    "SearchResult",
    "FoldSolver",
    "OutOfBudget",
    "enumerate_optima",
    "optimal",
    "DEFAULT_MAX_PREFIX",
    "search_certificate_agreement",
    "ISO_MAX_N",
    "ball_vs_square_report",
    "daisy_report",
    "max_internal_edges",
]
