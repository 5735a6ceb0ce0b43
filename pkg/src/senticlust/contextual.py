"""Phase one: text preparation and the five contextual rewriting processes.

The pipeline order is fixed: language screening, corpus cleaning, spelling
correction, intensifier handling, negation handling, contrast handling.
Every rewrite appends a provenance record to its document.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import EmptyCorpus
from .language import ENGLISH, LanguageDetector
from .lexicon import ReplacementDict, ScoredVocabulary
from .spelling import correct_spelling
from .tagging import TAG_ADJ, TAG_ADV, tag_token

SENTENCE_PUNCT = frozenset({".", "!", "?"})
CLAUSE_BOUNDARY = ","

DEFAULT_INTENSIFIERS = (
    "very", "so", "extremely", "really", "quite", "too",
    "totally", "absolutely", "highly", "incredibly",
)
DEFAULT_NEGATIONS = (
    "not", "never", "no", "n't", "hardly", "barely", "neither", "nor", "without",
)
DEFAULT_CONTRASTS_COORDINATING = ("but", "however", "yet", "nevertheless")
DEFAULT_CONTRASTS_SUBORDINATING = ("although", "though", "while", "despite")

_TAG_RE = re.compile(r"<[^>]*>")
_TOKEN_RE = re.compile(r"[a-z0-9]+(?:'[a-z0-9]+)*|'(?:s|re|ve|ll|d|m|t)\b|[^\sa-z0-9]")
_CLITICS = ("'s", "'re", "'ve", "'ll", "'d", "'m")
_WORDISH_RE = re.compile(r"[a-z0-9']")

# tokens before a '.' that do not end a sentence
_ABBREVIATION_STEMS = frozenset({
    "mr", "mrs", "ms", "dr", "st", "vs", "etc", "prof", "inc", "ltd", "jr", "sr", "no",
})


@dataclass(frozen=True)
class RawReview:
    source_id: str
    text: str
    gold_label: str | None = None


@dataclass
class Document:
    """A cleaned review: sentences of tokens plus its transformation history."""

    doc_id: int
    sentences: list[list[str]]
    gold_label: str | None = None
    source_id: str = ""
    is_seed: bool = False
    provenance: list[str] = field(default_factory=list)

    def tokens(self):
        for sentence in self.sentences:
            yield from sentence

    def token_count(self) -> int:
        return sum(len(s) for s in self.sentences)

    def text(self) -> str:
        return " ".join(" ".join(s) for s in self.sentences)

    def record(self, step: str, detail: str = "") -> None:
        self.provenance.append(f"{step}: {detail}" if detail else step)


@dataclass(frozen=True)
class WordLists:
    """Trigger-term lists for the three rewriting processes."""

    intensifiers: tuple[str, ...] = DEFAULT_INTENSIFIERS
    negations: tuple[str, ...] = DEFAULT_NEGATIONS
    contrasts_coordinating: tuple[str, ...] = DEFAULT_CONTRASTS_COORDINATING
    contrasts_subordinating: tuple[str, ...] = DEFAULT_CONTRASTS_SUBORDINATING
    negation_scope: int = 5

    def __post_init__(self):
        if self.negation_scope < 1:
            raise ValueError("negation_scope must be >= 1")
        groups = [
            set(self.intensifiers),
            set(self.negations),
            set(self.contrasts_coordinating),
            set(self.contrasts_subordinating),
        ]
        for i in range(len(groups)):
            for j in range(i + 1, len(groups)):
                overlap = groups[i] & groups[j]
                if overlap:
                    raise ValueError(f"word lists overlap: {sorted(overlap)}")


def _split_clitics(token: str):
    if token.endswith("n't") and len(token) > 3:
        yield token[:-3]
        yield "n't"
        return
    for clitic in _CLITICS:
        if token.endswith(clitic) and len(token) > len(clitic):
            yield token[: -len(clitic)]
            yield clitic
            return
    yield token


def tokenize(text: str) -> list[str]:
    """Lowercase and split into word and punctuation tokens."""
    tokens: list[str] = []
    for raw in _TOKEN_RE.findall(text.lower()):
        tokens.extend(_split_clitics(raw))
    return tokens


def _sentence_break(tokens: list[str], i: int) -> bool:
    """Does the sentence-punctuation token at position i end a sentence?"""
    token = tokens[i]
    if token in ("!", "?"):
        return True
    prev = tokens[i - 1] if i > 0 else ""
    if prev in _ABBREVIATION_STEMS:
        return False
    if len(prev) == 1 and prev.isalpha():
        return False  # initials and single-letter abbreviations
    nxt = tokens[i + 1] if i + 1 < len(tokens) else ""
    if prev.isdigit() and nxt.isdigit():
        return False  # decimal number
    return True


def split_sentences(tokens: list[str]) -> list[list[str]]:
    sentences: list[list[str]] = []
    current: list[str] = []
    i = 0
    while i < len(tokens):
        current.append(tokens[i])
        if tokens[i] in SENTENCE_PUNCT and _sentence_break(tokens, i):
            # absorb a trailing punctuation run ("?!", "...") into this sentence
            while i + 1 < len(tokens) and tokens[i + 1] in SENTENCE_PUNCT:
                i += 1
                current.append(tokens[i])
            sentences.append(current)
            current = []
        i += 1
    if current:
        sentences.append(current)
    return sentences


def prepare_text(text: str) -> list[list[str]]:
    """Strip markup, tokenize, and split into sentences."""
    return split_sentences(tokenize(_TAG_RE.sub(" ", text)))


def normalize_for_dedup(text: str) -> str:
    return re.sub(r"\s+", " ", text.lower()).strip()


def clean_corpus(reviews: list[RawReview]) -> list[Document]:
    """Drop duplicate reviews, strip markup, tokenize, split sentences.

    Duplicates are exact matches after lowercasing and whitespace collapse;
    the first occurrence wins. Document ids are assigned in input order.
    """
    seen: set[str] = set()
    docs: list[Document] = []
    for review in reviews:
        key = normalize_for_dedup(review.text)
        if not key or key in seen:
            continue
        seen.add(key)
        sentences = prepare_text(review.text)
        if not sentences:
            continue
        doc = Document(
            doc_id=len(docs),
            sentences=sentences,
            gold_label=review.gold_label,
            source_id=review.source_id,
        )
        doc.record("clean", f"{len(sentences)} sentence(s)")
        docs.append(doc)
    if not docs:
        raise EmptyCorpus("no reviews left after cleaning")
    return docs


def handle_intensifiers(
    doc: Document,
    lists: WordLists,
    synonyms: ReplacementDict,
    vocab: ScoredVocabulary,
) -> Document:
    """Replace each intensifier with a synonym of the term it intensifies.

    One left-to-right pass per sentence: an intensifier followed by an
    adjective/adverb becomes that word's synonym, or is dropped when no
    synonym exists. Replacements are not re-examined.
    """
    intensifiers = set(lists.intensifiers)
    for sentence in doc.sentences:
        i = 0
        while i < len(sentence):
            token = sentence[i]
            if token in intensifiers and i + 1 < len(sentence):
                nxt = sentence[i + 1]
                if tag_token(nxt, token, vocab) in (TAG_ADJ, TAG_ADV):
                    replacement = synonyms.get(nxt)
                    if replacement is not None:
                        sentence[i] = replacement
                        doc.record("intensifier", f"{token} {nxt} -> {replacement} {nxt}")
                    else:
                        del sentence[i]
                        doc.record("intensifier", f"dropped {token} before {nxt}")
                        continue
            i += 1
    doc.sentences = [s for s in doc.sentences if s]
    return doc


def handle_negation(
    doc: Document,
    lists: WordLists,
    antonyms: ReplacementDict,
    vocab: ScoredVocabulary,
) -> Document:
    """Flip adjectives/adverbs following a negation term, then drop the term.

    The scope covers the next `negation_scope` tokens but never crosses a
    sentence boundary or a comma. Negation terms inside another term's scope
    are left for their own pass, so nested negations each consume a scope.
    """
    negations = set(lists.negations)
    scope = lists.negation_scope
    for sentence in doc.sentences:
        i = 0
        while i < len(sentence):
            if sentence[i] not in negations:
                i += 1
                continue
            negation = sentence[i]
            end = min(len(sentence), i + 1 + scope)
            for j in range(i + 1, end):
                token = sentence[j]
                if token == CLAUSE_BOUNDARY:
                    break
                if token in negations:
                    continue
                if tag_token(token, sentence[j - 1], vocab) in (TAG_ADJ, TAG_ADV):
                    replacement = antonyms.get(token)
                    if replacement is not None:
                        sentence[j] = replacement
                        doc.record("negation", f"{token} -> {replacement}")
            del sentence[i]
            doc.record("negation", f"removed {negation}")
    doc.sentences = [s for s in doc.sentences if s]
    return doc


def handle_contrast(doc: Document, lists: WordLists) -> Document:
    """Keep only the concluding clause of sentences with a contrast term.

    A coordinating term (e.g. "but") keeps everything after its last
    occurrence. A subordinating term opening the sentence (e.g. "although")
    keeps everything after the first comma, or the whole sentence when there
    is none. Coordinating terms take precedence when both patterns appear.
    """
    coordinating = set(lists.contrasts_coordinating)
    subordinating = set(lists.contrasts_subordinating)
    kept_sentences: list[list[str]] = []
    for sentence in doc.sentences:
        kept = sentence
        positions = [k for k, t in enumerate(sentence) if t in coordinating]
        if positions:
            kept = sentence[positions[-1] + 1 :]
            doc.record("contrast", f"kept clause after {sentence[positions[-1]]}")
        elif sentence and sentence[0] in subordinating:
            if CLAUSE_BOUNDARY in sentence:
                kept = sentence[sentence.index(CLAUSE_BOUNDARY) + 1 :]
                doc.record("contrast", f"kept clause after comma ({sentence[0]})")
        while kept and not _WORDISH_RE.match(kept[0]):
            kept = kept[1:]
        if kept:
            kept_sentences.append(kept)
    doc.sentences = kept_sentences
    return doc


@dataclass
class ContextualConfig:
    """Everything the five-process pipeline needs, built once per run."""

    vocab: ScoredVocabulary
    synonyms: ReplacementDict
    antonyms: ReplacementDict
    word_lists: WordLists = WordLists()
    general_words: frozenset[str] = frozenset()
    detector: LanguageDetector | None = None
    spellcheck: bool = True


def run_contextual_pipeline(reviews: list[RawReview], config: ContextualConfig) -> list[Document]:
    """Apply the five processes in their fixed order and return the documents."""
    kept = reviews
    if config.detector is not None:
        kept = [r for r in reviews if config.detector.detect(r.text)[0] == ENGLISH]
        if not kept:
            raise EmptyCorpus("no English reviews in corpus")
    docs = clean_corpus(kept)
    lexicon_words = config.vocab.lemma_set()
    for doc in docs:
        if config.spellcheck:
            correct_spelling(doc, config.general_words, lexicon_words)
        handle_intensifiers(doc, config.word_lists, config.synonyms, config.vocab)
        handle_negation(doc, config.word_lists, config.antonyms, config.vocab)
        handle_contrast(doc, config.word_lists)
    return docs
