"""Reputation-based scoring of research programs from publication listings."""

from ._rscore import (
    CountsTable,
    Corpus,
    DataError,
    ReputationModel,
    ScoreReport,
    ScoreRow,
    StabilityReport,
    build_counts,
    build_reputation_model,
    load_corpus,
    parse_corpus,
    raw_score,
    run_cli,
    score_programs,
    spearman,
    stability_sweep,
    stationary_gth,
    weighted_faculty_count,
)

__all__ = [
    "CountsTable",
    "Corpus",
    "DataError",
    "ReputationModel",
    "ScoreReport",
    "ScoreRow",
    "StabilityReport",
    "build_counts",
    "build_reputation_model",
    "load_corpus",
    "parse_corpus",
    "raw_score",
    "run_cli",
    "score_programs",
    "spearman",
    "stability_sweep",
    "stationary_gth",
    "weighted_faculty_count",
]
