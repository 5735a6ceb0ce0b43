"""Majority-vote combination of the per-matrix clustering classifiers.

Classifiers whose two seeds land in one cluster are rejected and cast no
votes. Among the rest, each classifier labels a document by its cluster's
seed polarity; a document with a zero vector in some matrix abstains there.
Ties go to positive.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace

from .clustering import (
    ABSTAIN,
    G1,
    G2,
    G1_POSITIVE,
    REJECTED,
    ClusteringConfig,
    ClusterResult,
    kmeans_seeded,
)
from .errors import AllClassifiersRejected
from .lexicon import NEGATIVE, POSITIVE
from .vsm import VsmMatrix

FLAG_ALL_ABSTAIN = "all_abstain"
FLAG_SEED = "seed"


@dataclass(frozen=True)
class EnsembleConfig:
    max_iterations: int = 100
    jobs: int = 1

    def __post_init__(self):
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")


@dataclass(frozen=True)
class DocVerdict:
    doc_id: int
    label: str
    pos_votes: int
    neg_votes: int
    abstains: int
    flags: tuple[str, ...] = ()


@dataclass(frozen=True)
class EnsembleVerdict:
    verdicts: dict[int, DocVerdict]
    accepted_classifiers: int
    rejected_classifiers: int

    def label_of(self, doc_id: int) -> str:
        return self.verdicts[doc_id].label


def vote(labels) -> str:
    """Majority decision over positive/negative votes; ties are positive."""
    votes = list(labels)
    pos = sum(1 for v in votes if v == POSITIVE)
    neg = len(votes) - pos
    return POSITIVE if pos >= neg else NEGATIVE


def classifier_label(result: ClusterResult, doc_id: int) -> str | None:
    """One classifier's verdict on one document; None when it abstains."""
    cluster = result.assignment[doc_id]
    if cluster == ABSTAIN:
        return None
    positive_cluster = G1 if result.interpretation == G1_POSITIVE else G2
    return POSITIVE if cluster == positive_cluster else NEGATIVE


def tally(results: list[ClusterResult], doc_ids) -> EnsembleVerdict:
    """Aggregate accepted classifiers' labels into per-document verdicts."""
    accepted = [r for r in results if r.interpretation != REJECTED]
    if not accepted:
        raise AllClassifiersRejected("every component classifier was rejected")
    verdicts: dict[int, DocVerdict] = {}
    for doc_id in doc_ids:
        pos = neg = abstains = 0
        for result in accepted:
            label = classifier_label(result, doc_id)
            if label is None:
                abstains += 1
            elif label == POSITIVE:
                pos += 1
            else:
                neg += 1
        flags = (FLAG_ALL_ABSTAIN,) if pos + neg == 0 else ()
        verdicts[doc_id] = DocVerdict(
            doc_id=doc_id,
            label=POSITIVE if pos >= neg else NEGATIVE,
            pos_votes=pos,
            neg_votes=neg,
            abstains=abstains,
            flags=flags,
        )
    return EnsembleVerdict(
        verdicts=verdicts,
        accepted_classifiers=len(accepted),
        rejected_classifiers=len(results) - len(accepted),
    )


def _cluster_timed(matrix: VsmMatrix, config: ClusteringConfig) -> ClusterResult:
    started = time.perf_counter()
    result = kmeans_seeded(matrix, config)
    return replace(result, seconds=time.perf_counter() - started)


def run_ensemble(
    matrices: list[VsmMatrix],
    config: EnsembleConfig = EnsembleConfig(),
) -> tuple[list[ClusterResult], EnsembleVerdict]:
    """Cluster every matrix and combine the verdicts by majority vote.

    Matrices are independent jobs; with jobs > 1 they run on a thread pool.
    Results keep the input matrix order either way, so the outcome does not
    depend on the worker count.
    """
    if not matrices:
        raise ValueError("no matrices to cluster")
    clustering_config = ClusteringConfig(max_iterations=config.max_iterations)
    if config.jobs == 1:
        results = [_cluster_timed(m, clustering_config) for m in matrices]
    else:
        with ThreadPoolExecutor(max_workers=config.jobs) as pool:
            results = list(pool.map(lambda m: _cluster_timed(m, clustering_config), matrices))
    doc_ids = [int(i) for i in matrices[0].doc_ids]
    return results, tally(results, doc_ids)
