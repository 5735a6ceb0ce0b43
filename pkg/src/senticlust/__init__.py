"""senticlust: unsupervised sentiment classification of review corpora.

Phase one rewrites reviews using a sentiment lexicon (spelling, intensifier,
negation, and contrast handling); phase two clusters 24 weighted vector-space
models with seed-initialized cosine k-means and combines them by majority
vote.
"""

from .clustering import ClusteringConfig, ClusterResult, cosine_similarity, kmeans_seeded
from .contextual import Document, RawReview, WordLists, run_contextual_pipeline
from .ensemble import EnsembleConfig, EnsembleVerdict, run_ensemble, vote
from .evaluate import ConfusionMatrix, Metrics, confusion, metrics
from .features import FeatureSet, SeedPair, build_seeds, extract_features, reduce_neutral
from .lexicon import (
    LexiconEntry,
    ReplacementDict,
    ScoredVocabulary,
    average_scores,
    build_antonym_dict,
    build_synonym_dict,
    parse_lexicon,
)
from .vsm import ALL_SCHEMES, VsmMatrix, build_all, compute_stats

__version__ = "0.1.0"

__all__ = [
    "ALL_SCHEMES",
    "ClusterResult",
    "ClusteringConfig",
    "ConfusionMatrix",
    "Document",
    "EnsembleConfig",
    "EnsembleVerdict",
    "FeatureSet",
    "LexiconEntry",
    "Metrics",
    "RawReview",
    "ReplacementDict",
    "ScoredVocabulary",
    "SeedPair",
    "VsmMatrix",
    "WordLists",
    "average_scores",
    "build_all",
    "build_antonym_dict",
    "build_seeds",
    "build_synonym_dict",
    "compute_stats",
    "confusion",
    "cosine_similarity",
    "extract_features",
    "kmeans_seeded",
    "metrics",
    "parse_lexicon",
    "reduce_neutral",
    "run_contextual_pipeline",
    "run_ensemble",
    "vote",
]
