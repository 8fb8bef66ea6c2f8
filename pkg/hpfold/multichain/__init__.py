from .models import (
    Chain,
    Embedding,
    EmbeddingReport,
    EmbeddingViolation,
    EmbeddingViolationKind,
    HydroLevels,
    LevelsAudit,
    ParityClass,
    RingHypothesis,
    RingPlacementReport,
    TripleShape,
)
from .embedding import (
    chain_from_word,
    contribution_counts,
    contributions,
    embedding_score,
    intended_embedding,
    pair_value,
    potential_contacts,
    validate_embedding,
    zero_parity_classes,
)
from .lemmas import (
    BENT_TRIPLE,
    STRAIGHT_TRIPLE,
    classify_triple,
    enumerate_ring_placements,
    intended_score,
    levels_bound_audit,
    require_ring_lemma,
    ring_image,
    vertex_boundary,
)
from .embedding_file import (
    format_embedding_text,
    parse_embedding_text,
    read_embedding_file,
    write_embedding_file,
)

__all__ = [
    "Chain",
    "Embedding",
    "EmbeddingReport",
    "EmbeddingViolation",
    "EmbeddingViolationKind",
    "HydroLevels",
    "LevelsAudit",
    "ParityClass",
    "RingHypothesis",
    "RingPlacementReport",
    "TripleShape",
    "chain_from_word",
    "contribution_counts",
    "contributions",
    "embedding_score",
    "intended_embedding",
    "pair_value",
    "potential_contacts",
    "validate_embedding",
    "zero_parity_classes",
    "BENT_TRIPLE",
    "STRAIGHT_TRIPLE",
    "classify_triple",
    "enumerate_ring_placements",
    "intended_score",
    "levels_bound_audit",
    "require_ring_lemma",
    "ring_image",
    "vertex_boundary",
    "format_embedding_text",
    "parse_embedding_text",
    "read_embedding_file",
    "write_embedding_file",
]
