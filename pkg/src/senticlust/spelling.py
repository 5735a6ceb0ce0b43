"""Dictionary-backed spelling repair.

Unknown tokens are replaced by the nearest dictionary word within
Damerau-Levenshtein distance 1, then distance 2. Candidates from the
sentiment lexicon win over general-dictionary candidates at equal distance;
remaining ties break lexicographically.
"""

from __future__ import annotations

_ALPHABET = "abcdefghijklmnopqrstuvwxyz"

MIN_LENGTH = 4
_MAX_EDITS2_LENGTH = 16  # cost guard: distance-2 candidate sets grow fast


def edits1(word: str) -> set[str]:
    """All strings within one delete, transpose, replace, or insert."""
    splits = [(word[:i], word[i:]) for i in range(len(word) + 1)]
    deletes = [left + right[1:] for left, right in splits if right]
    transposes = [
        left + right[1] + right[0] + right[2:] for left, right in splits if len(right) > 1
    ]
    replaces = [left + c + right[1:] for left, right in splits if right for c in _ALPHABET]
    inserts = [left + c + right for left, right in splits for c in _ALPHABET]
    return set(deletes + transposes + replaces + inserts)


def _choose(candidates: set[str], lexicon_words: frozenset[str], general_words: frozenset[str]):
    from_lexicon = candidates & lexicon_words
    if from_lexicon:
        return min(from_lexicon)
    from_general = candidates & general_words
    if from_general:
        return min(from_general)
    return None


def correct_token(token: str, general_words: frozenset[str], lexicon_words: frozenset[str]) -> str:
    """Return the repaired token, or the token itself when nothing fits."""
    if len(token) < MIN_LENGTH or not token.isalpha():
        return token
    if token in lexicon_words or token in general_words:
        return token
    near = edits1(token)
    pick = _choose(near, lexicon_words, general_words)
    if pick is not None:
        return pick
    if len(token) <= _MAX_EDITS2_LENGTH:
        far = {e2 for e1 in near for e2 in edits1(e1)}
        pick = _choose(far, lexicon_words, general_words)
        if pick is not None:
            return pick
    return token


def correct_spelling(doc, general_words: frozenset[str], lexicon_words: frozenset[str]):
    """Repair every token of a document in place; records each rewrite."""
    for sentence in doc.sentences:
        for i, token in enumerate(sentence):
            fixed = correct_token(token, general_words, lexicon_words)
            if fixed != token:
                sentence[i] = fixed
                doc.record("spelling", f"{token} -> {fixed}")
    return doc
