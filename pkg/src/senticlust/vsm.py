"""The 24 weighted vector-space models.

Two base matrices (term frequency and term presence) each pass through six
weightings (raw, length-normalized, idf, tf-idf, wf-idf, and their average),
and every one of those 12 also gets a sentiment-score variant, 24 in total.
All variants share one sparsity structure; weighting only transforms values.

Logarithms are natural throughout: cosine similarity is invariant under the
positive constant factor a log-base change introduces, so the base only has
to be fixed once for determinism.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .contextual import Document
from .features import FeatureSet
from .lexicon import ScoredVocabulary
from .sparse import CsrMatrix

BASE_FREQUENCY = "Frequency"
BASE_PRESENCE = "Presence"
BASES = (BASE_FREQUENCY, BASE_PRESENCE)

WEIGHT_RAW = "Raw"
WEIGHT_TN = "TN"
WEIGHT_IDF = "IDF"
WEIGHT_TFIDF = "TFIDF"
WEIGHT_WFIDF = "WFIDF"
WEIGHT_AW = "AW"
WEIGHTS = (WEIGHT_RAW, WEIGHT_TN, WEIGHT_IDF, WEIGHT_TFIDF, WEIGHT_WFIDF, WEIGHT_AW)

SWN_SUFFIX = "-SWN"
SWN_COMBINE_MODES = ("multiply", "add", "append")


def scheme_label(base: str, weight: str, swn: bool = False) -> str:
    label = base if weight == WEIGHT_RAW else f"{base}-{weight}"
    return label + SWN_SUFFIX if swn else label


ALL_SCHEMES = tuple(
    scheme_label(base, weight, swn)
    for swn in (False, True)
    for base in BASES
    for weight in WEIGHTS
)


@dataclass(frozen=True)
class CorpusStats:
    """Document count, per-feature document frequency, per-row token length."""

    doc_count: int
    doc_freq: np.ndarray  # aligned with the feature set
    doc_length: np.ndarray  # aligned with matrix rows (doc id order)
    doc_ids: np.ndarray


@dataclass(frozen=True)
class VsmMatrix:
    scheme: str
    csr: CsrMatrix
    features: FeatureSet
    doc_ids: np.ndarray
    seed_positive_id: int
    seed_negative_id: int

    def row_of(self, doc_id: int) -> int:
        positions = np.nonzero(self.doc_ids == doc_id)[0]
        if positions.size == 0:
            raise KeyError(f"doc id {doc_id} not in matrix")
        return int(positions[0])

    def relabel(self, scheme: str, csr: CsrMatrix) -> "VsmMatrix":
        return VsmMatrix(
            scheme=scheme,
            csr=csr,
            features=self.features,
            doc_ids=self.doc_ids,
            seed_positive_id=self.seed_positive_id,
            seed_negative_id=self.seed_negative_id,
        )


def _ordered(corpus: list[Document]) -> list[Document]:
    return sorted(corpus, key=lambda d: d.doc_id)


def compute_stats(corpus: list[Document], features: FeatureSet) -> CorpusStats:
    """Exact counts over the corpus including the seed documents.

    Document length counts every surviving token, whether or not the token
    is in the (possibly reduced) feature set.
    """
    docs = _ordered(corpus)
    doc_freq = np.zeros(len(features), dtype=np.int64)
    doc_length = np.zeros(len(docs), dtype=np.int64)
    doc_ids = np.array([d.doc_id for d in docs], dtype=np.int64)
    for row, doc in enumerate(docs):
        doc_length[row] = doc.token_count()
        present = {features.position(t) for t in doc.tokens() if t in features}
        for column in present:
            doc_freq[column] += 1
    return CorpusStats(
        doc_count=len(docs), doc_freq=doc_freq, doc_length=doc_length, doc_ids=doc_ids
    )


def base_matrices(
    corpus: list[Document],
    features: FeatureSet,
    seed_positive_id: int,
    seed_negative_id: int,
) -> tuple[VsmMatrix, VsmMatrix]:
    """Build the frequency (bag of words) and presence matrices."""
    docs = _ordered(corpus)
    doc_ids = np.array([d.doc_id for d in docs], dtype=np.int64)
    rows = []
    for doc in docs:
        counts = Counter(t for t in doc.tokens() if t in features)
        rows.append({features.position(t): float(c) for t, c in counts.items()})
    freq_csr = CsrMatrix.from_rows(rows, len(features))
    pres_csr = freq_csr.with_data(np.ones_like(freq_csr.data))
    freq = VsmMatrix(
        scheme=scheme_label(BASE_FREQUENCY, WEIGHT_RAW),
        csr=freq_csr,
        features=features,
        doc_ids=doc_ids,
        seed_positive_id=seed_positive_id,
        seed_negative_id=seed_negative_id,
    )
    pres = freq.relabel(scheme_label(BASE_PRESENCE, WEIGHT_RAW), pres_csr)
    return freq, pres


def idf_vector(stats: CorpusStats) -> np.ndarray:
    """ln(doc_count / doc_freq) per feature; unused features get weight 0."""
    idf = np.zeros(stats.doc_freq.shape, dtype=np.float64)
    occurring = stats.doc_freq > 0
    idf[occurring] = np.log(stats.doc_count / stats.doc_freq[occurring])
    return idf


def _row_of_entry(csr: CsrMatrix) -> np.ndarray:
    return np.repeat(np.arange(csr.n_rows), np.diff(csr.indptr))


def weight_tn(matrix: VsmMatrix, stats: CorpusStats, base: str) -> VsmMatrix:
    """Divide each entry by its document's token length (Eq. tf = t / l)."""
    lengths = stats.doc_length[_row_of_entry(matrix.csr)].astype(np.float64)
    data = np.divide(matrix.csr.data, lengths, out=np.zeros_like(matrix.csr.data),
                     where=lengths > 0)
    return matrix.relabel(scheme_label(base, WEIGHT_TN), matrix.csr.with_data(data))


def weight_idf(matrix: VsmMatrix, idf: np.ndarray, base: str) -> VsmMatrix:
    """Multiply each entry by its feature's idf."""
    data = matrix.csr.data * idf[matrix.csr.indices]
    return matrix.relabel(scheme_label(base, WEIGHT_IDF), matrix.csr.with_data(data))


def weight_tfidf(tn_matrix: VsmMatrix, idf: np.ndarray, base: str) -> VsmMatrix:
    """Length-normalized frequency times idf."""
    data = tn_matrix.csr.data * idf[tn_matrix.csr.indices]
    return tn_matrix.relabel(scheme_label(base, WEIGHT_TFIDF), tn_matrix.csr.with_data(data))


def weight_wfidf(matrix: VsmMatrix, idf: np.ndarray, base: str) -> VsmMatrix:
    """(1 + ln tf) * idf on nonzero entries, zero elsewhere.

    tf here is the raw entry of the base matrix (the count for frequency, 1
    for presence), not the length-normalized fraction: the sublinear damping
    needs tf >= 1 to stay non-negative.
    """
    csr = matrix.csr
    data = np.zeros_like(csr.data)
    positive = csr.data > 0
    data[positive] = (1.0 + np.log(csr.data[positive])) * idf[csr.indices[positive]]
    return matrix.relabel(scheme_label(base, WEIGHT_WFIDF), csr.with_data(data))


def weight_aw(tfidf_matrix: VsmMatrix, wfidf_matrix: VsmMatrix, base: str) -> VsmMatrix:
    """Element-wise mean of the tf-idf and wf-idf values."""
    if tfidf_matrix.csr.data.shape != wfidf_matrix.csr.data.shape:
        raise ValueError("tf-idf and wf-idf matrices must share their structure")
    data = (tfidf_matrix.csr.data + wfidf_matrix.csr.data) / 2.0
    return tfidf_matrix.relabel(scheme_label(base, WEIGHT_AW), tfidf_matrix.csr.with_data(data))


def augment_swn(matrix: VsmMatrix, vocab: ScoredVocabulary, mode: str = "multiply") -> VsmMatrix:
    """Fold the signed per-feature sentiment scores into a plain matrix.

    multiply: entry * score (the default geometry change);
    add:      entry + score on nonzero entries only, preserving sparsity;
    append:   extra score-valued columns, one per feature, gated on presence.
    """
    if mode not in SWN_COMBINE_MODES:
        raise ValueError(f"unknown swn combine mode {mode!r}")
    scores = np.array(
        [vocab.final_score(f) or 0.0 for f in matrix.features], dtype=np.float64
    )
    csr = matrix.csr
    label = matrix.scheme + SWN_SUFFIX
    if mode == "multiply":
        new_csr = csr.with_data(csr.data * scores[csr.indices])
    elif mode == "add":
        data = csr.data.copy()
        nonzero = data != 0
        data[nonzero] = data[nonzero] + scores[csr.indices[nonzero]]
        new_csr = csr.with_data(data)
    else:  # append
        rows = []
        for i in range(csr.n_rows):
            columns, values = csr.row(i)
            row = {int(c): float(v) for c, v in zip(columns, values)}
            for c, v in zip(columns, values):
                if v != 0:
                    row[int(c) + csr.n_cols] = float(scores[c])
            rows.append(row)
        new_csr = CsrMatrix.from_rows(rows, csr.n_cols * 2)
    return matrix.relabel(label, new_csr)


def build_all(
    corpus: list[Document],
    features: FeatureSet,
    vocab: ScoredVocabulary,
    seed_positive_id: int,
    seed_negative_id: int,
    schemes: tuple[str, ...] | None = None,
    swn_combine: str = "multiply",
) -> list[VsmMatrix]:
    """Build the requested matrices (all 24 by default) in a fixed order."""
    if schemes is not None:
        unknown = set(schemes) - set(ALL_SCHEMES)
        if unknown:
            raise ValueError(f"unknown scheme labels: {sorted(unknown)}")
    stats = compute_stats(corpus, features)
    idf = idf_vector(stats)
    freq_raw, pres_raw = base_matrices(corpus, features, seed_positive_id, seed_negative_id)

    plain: dict[str, VsmMatrix] = {}
    for base, raw in ((BASE_FREQUENCY, freq_raw), (BASE_PRESENCE, pres_raw)):
        tn = weight_tn(raw, stats, base)
        idfm = weight_idf(raw, idf, base)
        tfidf = weight_tfidf(tn, idf, base)
        wfidf = weight_wfidf(raw, idf, base)
        aw = weight_aw(tfidf, wfidf, base)
        for m in (raw, tn, idfm, tfidf, wfidf, aw):
            plain[m.scheme] = m

    matrices: list[VsmMatrix] = []
    for label in ALL_SCHEMES:
        if schemes is not None and label not in schemes:
            continue
        if label.endswith(SWN_SUFFIX):
            matrices.append(
                augment_swn(plain[label[: -len(SWN_SUFFIX)]], vocab, swn_combine)
            )
        else:
            matrices.append(plain[label])
    return matrices


def dump_matrix(matrix: VsmMatrix, path) -> None:
    """Write one matrix as TSV: feature header, then doc_id -> idx:val pairs."""
    header = list(matrix.features)
    if matrix.csr.n_cols == 2 * len(header):  # append-mode score columns
        header += [f"{f}:score" for f in matrix.features]
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("doc_id\t" + "\t".join(header) + "\n")
        for row in range(matrix.csr.n_rows):
            columns, values = matrix.csr.row(row)
            cells = ",".join(f"{c}:{v:.17g}" for c, v in zip(columns, values))
            fh.write(f"{matrix.doc_ids[row]}\t{cells}\n")


def load_matrix_rows(path) -> tuple[list[str], dict[int, dict[int, float]]]:
    """Read a dumped matrix back into its header and per-doc sparse rows."""
    with open(path, encoding="utf-8") as fh:
        header = fh.readline().rstrip("\n").split("\t")[1:]
        rows: dict[int, dict[int, float]] = {}
        for line in fh:
            line = line.rstrip("\n")
            if not line:
                continue
            doc_part, _, cells = line.partition("\t")
            row: dict[int, float] = {}
            if cells:
                for cell in cells.split(","):
                    idx, _, val = cell.partition(":")
                    row[int(idx)] = float(val)
            rows[int(doc_part)] = row
    return header, rows
