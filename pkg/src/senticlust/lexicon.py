"""SentiWordNet-format lexicon handling.

Parses the tab-separated lexicon file, averages per-term synset scores into a
single signed score per (lemma, tag), and derives the two replacement
dictionaries used by contextual rewriting: score-preserving synonyms and
score-mirroring antonyms.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass

from .errors import EmptyLexicon, NoOppositePolarity, ParseError

POSITIVE = "positive"
NEGATIVE = "negative"
NEUTRAL = "neutral"
UNKNOWN = "unknown"

TAG_ADJ = "a"
TAG_ADV = "r"

_VALID_POS = ("a", "r", "n", "v")
_SCORED_POS = (TAG_ADJ, TAG_ADV)


@dataclass(frozen=True)
class LexiconEntry:
    """One synset line: POS tag, id, the two scores, and its lemma list."""

    pos_tag: str
    synset_id: str
    pos_score: float
    neg_score: float
    terms: tuple[str, ...]


@dataclass(frozen=True)
class TermScore:
    avg_pos: float
    avg_neg: float
    final_score: float
    synset_count: int


def parse_lexicon(path) -> list[LexiconEntry]:
    """Read a SentiWordNet 3.0 style file into entries.

    Expected columns: POS, ID, PosScore, NegScore, SynsetTerms[, Gloss].
    Lines starting with '#' and blank lines are skipped. Synset terms carry a
    '#<sense>' suffix which is stripped; lemmas are lowercased.
    """
    entries: list[LexiconEntry] = []
    with open(path, encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            cols = line.split("\t")
            if len(cols) < 5:
                raise ParseError(line_no, "expected at least 5 tab-separated columns")
            pos_tag, synset_id, pos_raw, neg_raw, terms_col = cols[:5]
            if pos_tag not in _VALID_POS:
                raise ParseError(line_no, f"unknown POS tag {pos_tag!r}")
            try:
                pos_score = float(pos_raw)
                neg_score = float(neg_raw)
            except ValueError:
                raise ParseError(line_no, "scores must be numeric") from None
            if not (0.0 <= pos_score <= 1.0 and 0.0 <= neg_score <= 1.0):
                raise ParseError(line_no, "scores must lie in [0, 1]")
            if pos_score + neg_score > 1.0 + 1e-9:
                raise ParseError(line_no, "positive + negative score exceeds 1")
            terms = tuple(t.rsplit("#", 1)[0].lower() for t in terms_col.split() if t)
            if not terms:
                raise ParseError(line_no, "no synset terms")
            entries.append(LexiconEntry(pos_tag, synset_id, pos_score, neg_score, terms))
    return entries


class ScoredVocabulary:
    """Averaged sentiment scores per (lemma, tag) with sign-based polarity.

    Scores are kept separately for adjective and adverb readings. When a
    lookup names a tag with no entry (or no tag at all), the mean over the
    readings that do exist is used instead, since run-time tagging is
    imperfect. Immutable after construction; safe for concurrent reads.
    """

    def __init__(self, scores: dict[tuple[str, str], TermScore], neutral_epsilon: float = 0.0):
        if neutral_epsilon < 0:
            raise ValueError("neutral_epsilon must be >= 0")
        self._scores = dict(scores)
        self.neutral_epsilon = neutral_epsilon
        blended: dict[str, TermScore] = {}
        by_lemma: dict[str, list[TermScore]] = {}
        for (lemma, _tag), ts in self._scores.items():
            by_lemma.setdefault(lemma, []).append(ts)
        for lemma, parts in by_lemma.items():
            if len(parts) == 1:
                blended[lemma] = parts[0]
            else:
                avg_pos = math.fsum(p.avg_pos for p in parts) / len(parts)
                avg_neg = math.fsum(p.avg_neg for p in parts) / len(parts)
                blended[lemma] = TermScore(
                    avg_pos, avg_neg, avg_pos - avg_neg, sum(p.synset_count for p in parts)
                )
        self._blended = blended

    def __len__(self) -> int:
        return len(self._scores)

    def __contains__(self, lemma: str) -> bool:
        return lemma in self._blended

    def tags_for(self, lemma: str) -> tuple[str, ...]:
        return tuple(t for t in _SCORED_POS if (lemma, t) in self._scores)

    def lookup(self, lemma: str, tag: str | None = None) -> TermScore | None:
        if tag is not None:
            ts = self._scores.get((lemma, tag))
            if ts is not None:
                return ts
        return self._blended.get(lemma)

    def final_score(self, lemma: str, tag: str | None = None) -> float | None:
        ts = self.lookup(lemma, tag)
        return None if ts is None else ts.final_score

    def polarity(self, lemma: str, tag: str | None = None) -> str:
        ts = self.lookup(lemma, tag)
        if ts is None:
            return UNKNOWN
        if ts.final_score > self.neutral_epsilon:
            return POSITIVE
        if ts.final_score < -self.neutral_epsilon:
            return NEGATIVE
        return NEUTRAL

    def lemmas(self) -> list[str]:
        return sorted(self._blended)

    def lemma_set(self) -> frozenset[str]:
        return frozenset(self._blended)

    def items(self):
        return self._scores.items()


def average_scores(entries: list[LexiconEntry], neutral_epsilon: float = 0.0) -> ScoredVocabulary:
    """Average synset scores per (lemma, tag); only adjective/adverb entries count.

    Multi-word lemmas (containing '_') are skipped: features are single
    tokens. Sums use math.fsum so the result is exact for the true sum and
    therefore independent of entry order.
    """
    buckets: dict[tuple[str, str], tuple[list[float], list[float]]] = {}
    for entry in entries:
        if entry.pos_tag not in _SCORED_POS:
            continue
        for lemma in entry.terms:
            if "_" in lemma:
                continue
            pos_list, neg_list = buckets.setdefault((lemma, entry.pos_tag), ([], []))
            pos_list.append(entry.pos_score)
            neg_list.append(entry.neg_score)
    if not buckets:
        raise EmptyLexicon("no adjective or adverb entries in lexicon")
    scores: dict[tuple[str, str], TermScore] = {}
    for key, (pos_list, neg_list) in buckets.items():
        n = len(pos_list)
        avg_pos = math.fsum(pos_list) / n
        avg_neg = math.fsum(neg_list) / n
        scores[key] = TermScore(avg_pos, avg_neg, avg_pos - avg_neg, n)
    return ScoredVocabulary(scores, neutral_epsilon)


@dataclass(frozen=True)
class ReplacementDict:
    """A lemma -> replacement mapping derived from the scored vocabulary."""

    pairs: dict[str, str]
    closeness_tolerance: float = 0.0

    def get(self, lemma: str) -> str | None:
        return self.pairs.get(lemma)

    def __contains__(self, lemma: str) -> bool:
        return lemma in self.pairs

    def __len__(self) -> int:
        return len(self.pairs)

    def items(self):
        return self.pairs.items()


def _score_blocks(scored: list[tuple[float, str]]) -> tuple[list[float], list[list[str]]]:
    """Group (score, lemma) pairs into per-score lemma blocks, both sorted."""
    values: list[float] = []
    blocks: list[list[str]] = []
    for score, lemma in sorted(scored):
        if values and score == values[-1]:
            blocks[-1].append(lemma)
        else:
            values.append(score)
            blocks.append([lemma])
    return values, blocks


def build_synonym_dict(vocab: ScoredVocabulary, tolerance: float = 0.01) -> ReplacementDict:
    """Map each lemma to the distinct lemma with the nearest blended score.

    Ties break to the lexicographically smallest candidate. Lemmas whose
    nearest neighbour lies further than `tolerance` away are left out.
    """
    if tolerance < 0:
        raise ValueError("tolerance must be >= 0")
    scored = [(vocab.final_score(lemma), lemma) for lemma in vocab.lemmas()]
    values, blocks = _score_blocks(scored)
    pairs: dict[str, str] = {}
    for i, block in enumerate(blocks):
        for lemma in block:
            if len(block) > 1:
                candidate = block[0] if block[0] != lemma else block[1]
                pairs[lemma] = candidate
                continue
            d_lo = values[i] - values[i - 1] if i > 0 else math.inf
            d_hi = values[i + 1] - values[i] if i + 1 < len(values) else math.inf
            best = min(d_lo, d_hi)
            if best > tolerance or math.isinf(best):
                continue
            candidates = []
            if d_lo == best:
                candidates.append(blocks[i - 1][0])
            if d_hi == best:
                candidates.append(blocks[i + 1][0])
            pairs[lemma] = min(candidates)
    return ReplacementDict(pairs, tolerance)


def build_antonym_dict(vocab: ScoredVocabulary) -> ReplacementDict:
    """Map each polar lemma to the opposite-sign lemma mirroring its score.

    The replacement minimises |score(w) + score(w')|; ties break to the
    lexicographically smallest candidate. Neutral lemmas are absent.
    """
    eps = vocab.neutral_epsilon
    positives = []
    negatives = []
    for lemma in vocab.lemmas():
        score = vocab.final_score(lemma)
        if score > eps:
            positives.append((score, lemma))
        elif score < -eps:
            negatives.append((score, lemma))
    if not positives or not negatives:
        raise NoOppositePolarity("vocabulary holds only one polarity sign")
    pairs: dict[str, str] = {}
    for source, targets in ((positives, negatives), (negatives, positives)):
        values, blocks = _score_blocks(targets)
        for score, lemma in source:
            mirror = -score
            j = bisect.bisect_left(values, mirror)
            d_lo = mirror - values[j - 1] if j > 0 else math.inf
            d_hi = values[j] - mirror if j < len(values) else math.inf
            best = min(d_lo, d_hi)
            candidates = []
            if d_lo == best:
                candidates.append(blocks[j - 1][0])
            if d_hi == best:
                candidates.append(blocks[j][0])
            pairs[lemma] = min(candidates)
    return ReplacementDict(pairs)


def dump_replacements(replacements: ReplacementDict, vocab: ScoredVocabulary, path) -> None:
    """Write (lemma, replacement, score) rows for inspection."""
    with open(path, "w", encoding="utf-8") as fh:
        for lemma in sorted(replacements.pairs):
            score = vocab.final_score(lemma)
            fh.write(f"{lemma}\t{replacements.pairs[lemma]}\t{score:.17g}\n")


def load_replacements(path, tolerance: float = 0.0) -> ReplacementDict:
    """Read a (lemma, replacement, score) file back into a ReplacementDict."""
    pairs: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            cols = line.split("\t")
            pairs[cols[0]] = cols[1]
    return ReplacementDict(pairs, tolerance)


def dump_vocabulary(vocab: ScoredVocabulary, path) -> None:
    """Write per-(lemma, tag) averaged scores as TSV."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("lemma\ttag\tavg_pos\tavg_neg\tfinal_score\tsynset_count\n")
        for (lemma, tag), ts in sorted(vocab.items()):
            fh.write(
                f"{lemma}\t{tag}\t{ts.avg_pos:.17g}\t{ts.avg_neg:.17g}"
                f"\t{ts.final_score:.17g}\t{ts.synset_count}\n"
            )
