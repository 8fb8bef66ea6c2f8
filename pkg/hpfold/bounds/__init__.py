from .bounds import (
    GENERIC_BOUND,
    HEX_BOUND,
    RECT2D_BOUND,
    best_bound,
    bound_name,
    handshake_bound,
    upper_bound,
)
from .certificates import (
    EXACT_SEARCH,
    Certificate,
    ClaimKind,
    certify_equality,
    certify_suffix_drop,
    certify_wrap_drop,
    lift_counterexample,
    replay,
)
from .monotone import MonotoneReport, SweepReport, default_oracle, monotone_sweep, suffix_monotone_check

__all__ = [
    "GENERIC_BOUND",
    "HEX_BOUND",
    "RECT2D_BOUND",
    "best_bound",
    "bound_name",
    "handshake_bound",
    "upper_bound",
    "EXACT_SEARCH",
    "Certificate",
    "ClaimKind",
    "certify_equality",
    "certify_suffix_drop",
    "certify_wrap_drop",
    "lift_counterexample",
    "replay",
    "MonotoneReport",
    "SweepReport",
    "default_oracle",
    "monotone_sweep",
    "suffix_monotone_check",
]
