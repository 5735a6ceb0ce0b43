"""Feature extraction and seed construction.

The feature space is the ordered set of unique adjective/adverb lemmas seen
in the corpus. Neutral lemmas can be dropped, and the remaining polar lemmas
are split by sign into the two seed documents that anchor the clusterers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .contextual import Document
from .errors import DegenerateSeed, EmptyFeatureSet
from .lexicon import NEGATIVE, POSITIVE, ScoredVocabulary
from .tagging import TAG_ADJ, TAG_ADV, tag_sentence

SEED_POSITIVE_SOURCE = "__seed_positive__"
SEED_NEGATIVE_SOURCE = "__seed_negative__"


class FeatureSet:
    """Unique lemmas in first-appearance order, with a dimension index."""

    def __init__(self, lemmas):
        self.lemmas: tuple[str, ...] = tuple(lemmas)
        self.index: dict[str, int] = {lemma: i for i, lemma in enumerate(self.lemmas)}
        if len(self.index) != len(self.lemmas):
            raise ValueError("feature lemmas must be unique")

    def __len__(self) -> int:
        return len(self.lemmas)

    def __iter__(self):
        return iter(self.lemmas)

    def __contains__(self, lemma: str) -> bool:
        return lemma in self.index

    def __eq__(self, other) -> bool:
        return isinstance(other, FeatureSet) and self.lemmas == other.lemmas

    def position(self, lemma: str) -> int:
        return self.index[lemma]


def extract_features(corpus: list[Document], vocab: ScoredVocabulary) -> FeatureSet:
    """Collect unique adjective/adverb lemmas; drop everything else from docs.

    Documents are visited in id order, so the feature order is stable across
    runs. Each document keeps only its adjective/adverb tokens afterwards.
    """
    ordered: list[str] = []
    seen: set[str] = set()
    for doc in sorted(corpus, key=lambda d: d.doc_id):
        kept_sentences: list[list[str]] = []
        dropped = 0
        for sentence in doc.sentences:
            kept: list[str] = []
            for tagged in tag_sentence(sentence, vocab):
                if tagged.tag in (TAG_ADJ, TAG_ADV):
                    kept.append(tagged.surface)
                    if tagged.surface not in seen:
                        seen.add(tagged.surface)
                        ordered.append(tagged.surface)
                else:
                    dropped += 1
            if kept:
                kept_sentences.append(kept)
        doc.sentences = kept_sentences
        doc.record("pos-filter", f"dropped {dropped} non-adjective/adverb token(s)")
    if not ordered:
        raise EmptyFeatureSet("no adjective or adverb tokens in corpus")
    return FeatureSet(ordered)


def reduce_neutral(features: FeatureSet, vocab: ScoredVocabulary) -> FeatureSet:
    """Drop features whose polarity is neutral or unknown, keeping order."""
    polar = [f for f in features if vocab.polarity(f) in (POSITIVE, NEGATIVE)]
    if not polar:
        raise EmptyFeatureSet("no polar features after neutral reduction")
    return FeatureSet(polar)


@dataclass(frozen=True)
class SeedPair:
    positive_seed: Document
    negative_seed: Document


def build_seeds(features: FeatureSet, vocab: ScoredVocabulary, corpus: list[Document]) -> SeedPair:
    """Split polar features into the two seed documents and append them.

    Each seed holds its class's features exactly once, in feature order. The
    seeds take the next two document ids and are flagged so evaluation can
    exclude them.
    """
    positive = [f for f in features if vocab.polarity(f) == POSITIVE]
    negative = [f for f in features if vocab.polarity(f) == NEGATIVE]
    if not positive or not negative:
        raise DegenerateSeed("need at least one positive and one negative feature")
    next_id = max(doc.doc_id for doc in corpus) + 1 if corpus else 0
    pos_doc = Document(
        doc_id=next_id,
        sentences=[positive],
        source_id=SEED_POSITIVE_SOURCE,
        is_seed=True,
    )
    neg_doc = Document(
        doc_id=next_id + 1,
        sentences=[negative],
        source_id=SEED_NEGATIVE_SOURCE,
        is_seed=True,
    )
    pos_doc.record("seed", "positive features")
    neg_doc.record("seed", "negative features")
    corpus.append(pos_doc)
    corpus.append(neg_doc)
    return SeedPair(pos_doc, neg_doc)
