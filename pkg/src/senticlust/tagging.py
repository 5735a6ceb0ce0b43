"""Rule-based adjective/adverb tagging.

A token is tagged from its lexicon membership first; lemmas listed under both
readings are disambiguated by the preceding token (determiners and copulas
select the adjective reading). Tokens unknown to the lexicon fall back to a
few reliable suffixes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lexicon import TAG_ADJ, TAG_ADV, ScoredVocabulary

TAG_OTHER = "other"

_ADJ_SUFFIXES = ("ful", "ous", "ive", "able", "less")
_ADV_SUFFIX = "ly"

_DETERMINERS_AND_COPULAS = frozenset({
    "a", "an", "the", "this", "that", "these", "those",
    "is", "was", "are", "were", "am", "be", "been", "being",
})


@dataclass(frozen=True)
class TaggedToken:
    surface: str
    tag: str


def tag_token(token: str, prev_token: str, vocab: ScoredVocabulary) -> str:
    if not token or not token[0].isalpha():
        return TAG_OTHER
    tags = vocab.tags_for(token)
    if tags == (TAG_ADJ,):
        return TAG_ADJ
    if tags == (TAG_ADV,):
        return TAG_ADV
    if len(tags) == 2:
        return TAG_ADJ if prev_token in _DETERMINERS_AND_COPULAS else TAG_ADV
    if token.endswith(_ADV_SUFFIX) and len(token) > len(_ADV_SUFFIX) + 1:
        return TAG_ADV
    for suffix in _ADJ_SUFFIXES:
        if token.endswith(suffix) and len(token) > len(suffix) + 1:
            return TAG_ADJ
    return TAG_OTHER


def tag_sentence(tokens: list[str], vocab: ScoredVocabulary) -> list[TaggedToken]:
    tagged = []
    prev = ""
    for token in tokens:
        tagged.append(TaggedToken(token, tag_token(token, prev, vocab)))
        prev = token
    return tagged
