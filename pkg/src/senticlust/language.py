"""Character-trigram language screening.

Reviews are compared against a bundled English trigram profile by cosine
similarity; anything scoring below the threshold is treated as non-English.
Texts shorter than 20 characters carry too little signal and pass through as
English.
"""

from __future__ import annotations

from collections import Counter
from importlib import resources
from math import sqrt

ENGLISH = "english"
OTHER = "other"

DEFAULT_THRESHOLD = 0.30
MIN_LENGTH = 20

_PROFILE_RESOURCE = "english_trigrams.tsv"


def normalize(text: str) -> str:
    """Lowercase, keep only alphabetic characters, collapse whitespace."""
    chars = [c if c.isalpha() else " " for c in text.lower()]
    return " ".join("".join(chars).split())


def trigram_counts(text: str) -> Counter:
    grams: Counter = Counter()
    for word in normalize(text).split():
        padded = f" {word} "
        for i in range(len(padded) - 2):
            grams[padded[i : i + 3]] += 1
    return grams


def cosine(a: Counter, b: Counter) -> float:
    if not a or not b:
        return 0.0
    dot = sum(count * b[gram] for gram, count in a.items() if gram in b)
    norm_a = sqrt(sum(c * c for c in a.values()))
    norm_b = sqrt(sum(c * c for c in b.values()))
    if norm_a == 0.0 or norm_b == 0.0:
        return 0.0
    return dot / (norm_a * norm_b)


def build_profile(text: str, top: int = 600) -> dict[str, int]:
    """Keep the `top` most frequent trigrams; ties break lexicographically."""
    counts = trigram_counts(text)
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    return dict(ranked[:top])


def save_profile(profile: dict[str, int], path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for gram, count in sorted(profile.items(), key=lambda kv: (-kv[1], kv[0])):
            fh.write(f"{gram}\t{count}\n")


def load_profile(path) -> dict[str, int]:
    profile: dict[str, int] = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if not line:
                continue
            gram, count = line.split("\t")
            profile[gram] = int(count)
    return profile


class LanguageDetector:
    """English/other verdicts from trigram cosine against a fixed profile."""

    def __init__(self, profile: dict[str, int], threshold: float = DEFAULT_THRESHOLD):
        self.profile = Counter(profile)
        self.threshold = threshold

    @classmethod
    def bundled(cls, threshold: float = DEFAULT_THRESHOLD) -> "LanguageDetector":
        data = resources.files("senticlust").joinpath("data", _PROFILE_RESOURCE)
        with resources.as_file(data) as path:
            return cls(load_profile(path), threshold)

    def similarity(self, text: str) -> float:
        return cosine(trigram_counts(text), self.profile)

    def detect(self, text: str) -> tuple[str, float]:
        """Return (verdict, confidence); short texts pass as English."""
        if len(normalize(text)) < MIN_LENGTH:
            return ENGLISH, 1.0
        sim = self.similarity(text)
        return (ENGLISH if sim >= self.threshold else OTHER), sim
