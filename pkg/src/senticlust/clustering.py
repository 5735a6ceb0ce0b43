"""Two-cluster k-means with fixed seed centroids and cosine similarity.

No randomness anywhere: centroids start at the two seed rows, assignment
ties go to the first cluster, and every repair rule is deterministic, so a
matrix always clusters the same way. Documents whose row is all zero cannot
be compared and abstain instead of being forced into a cluster.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ZeroSeedRow
from .vsm import VsmMatrix

G1 = "G1"
G2 = "G2"
ABSTAIN = "abstain"

G1_POSITIVE = "g1_positive"
G2_POSITIVE = "g2_positive"
REJECTED = "rejected"

_LABEL_NAMES = (G1, G2, ABSTAIN)


@dataclass(frozen=True)
class ClusteringConfig:
    k: int = 2
    max_iterations: int = 100

    def __post_init__(self):
        if self.k != 2:
            raise ValueError("only two clusters are supported")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be >= 1")


@dataclass(frozen=True)
class ClusterResult:
    scheme: str
    assignment: dict[int, str]  # doc_id -> G1 | G2 | abstain
    iterations_used: int
    interpretation: str
    abstained: int
    seconds: float = 0.0


def cosine_similarity(u, v) -> float:
    """Cosine of two dense vectors; zero when either has zero norm."""
    u = np.asarray(u, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)
    norm_u = float(np.sqrt(np.dot(u, u)))
    norm_v = float(np.sqrt(np.dot(v, v)))
    if norm_u == 0.0 or norm_v == 0.0:
        return 0.0
    return float(np.dot(u, v)) / (norm_u * norm_v)


def interpret(assignment: dict[int, str], seed_positive_id: int, seed_negative_id: int) -> str:
    """Read cluster polarity off the seed positions; co-located seeds reject."""
    pos = assignment[seed_positive_id]
    neg = assignment[seed_negative_id]
    if pos == G1 and neg == G2:
        return G1_POSITIVE
    if pos == G2 and neg == G1:
        return G2_POSITIVE
    return REJECTED


def _assign(matrix, norms, c1, c2, backend):
    """One assignment pass: 0 -> G1, 1 -> G2, 2 -> abstain; ties go to G1."""
    dots1, dots2 = matrix.csr.two_centroid_dots(c1, c2, backend)
    norm1 = float(np.sqrt(np.dot(c1, c1)))
    norm2 = float(np.sqrt(np.dot(c2, c2)))
    with np.errstate(invalid="ignore", divide="ignore"):
        sims1 = np.where((norms > 0) & (norm1 > 0), dots1 / (norms * norm1), 0.0)
        sims2 = np.where((norms > 0) & (norm2 > 0), dots2 / (norms * norm2), 0.0)
    labels = np.where(sims1 >= sims2, 0, 1).astype(np.int8)
    labels[norms == 0.0] = 2
    return labels, sims1, sims2


def _repair_empty(labels, sims1, sims2):
    """If a cluster emptied, hand it the other cluster's least similar point."""
    in_g1 = labels == 0
    in_g2 = labels == 1
    if not in_g1.any() and in_g2.any():
        candidates = np.where(in_g2, sims2, np.inf)
        labels[int(np.argmin(candidates))] = 0
    elif not in_g2.any() and in_g1.any():
        candidates = np.where(in_g1, sims1, np.inf)
        labels[int(np.argmin(candidates))] = 1
    return labels


def kmeans_seeded(
    matrix: VsmMatrix,
    config: ClusteringConfig = ClusteringConfig(),
    backend: dict | None = None,
) -> ClusterResult:
    """Lloyd iteration from the two seed rows under cosine similarity.

    Convergence is "no reassignment"; iterations_used counts the centroid
    updates performed before the assignment stabilised.
    """
    csr = matrix.csr
    norms = csr.row_norms(backend)
    pos_row = matrix.row_of(matrix.seed_positive_id)
    neg_row = matrix.row_of(matrix.seed_negative_id)
    if norms[pos_row] == 0.0 or norms[neg_row] == 0.0:
        raise ZeroSeedRow(f"seed row has zero norm in matrix {matrix.scheme}")

    c1 = csr.row_dense(pos_row)
    c2 = csr.row_dense(neg_row)
    labels = None
    iterations_used = config.max_iterations
    for iteration in range(1, config.max_iterations + 1):
        new_labels, sims1, sims2 = _assign(matrix, norms, c1, c2, backend)
        new_labels = _repair_empty(new_labels, sims1, sims2)
        if labels is not None and np.array_equal(new_labels, labels):
            iterations_used = iteration - 1
            break
        labels = new_labels
        sum1, sum2, count1, count2 = csr.group_sums(labels, backend)
        if count1 > 0:
            c1 = sum1 / count1
        if count2 > 0:
            c2 = sum2 / count2

    assignment = {
        int(doc_id): _LABEL_NAMES[label]
        for doc_id, label in zip(matrix.doc_ids, labels)
    }
    return ClusterResult(
        scheme=matrix.scheme,
        assignment=assignment,
        iterations_used=iterations_used,
        interpretation=interpret(assignment, matrix.seed_positive_id, matrix.seed_negative_id),
        abstained=int(np.count_nonzero(labels == 2)),
    )
