"""Run configuration: defaults, config-file parsing, bundled resources."""

from __future__ import annotations

from dataclasses import dataclass, field, fields
from importlib import resources
from pathlib import Path

from .contextual import WordLists
from .errors import ConfigError
from .vsm import ALL_SCHEMES, SWN_COMBINE_MODES

ENV_LEXICON = "SENTI_LEXICON"

_WORDLIST_FILES = {
    "intensifiers": "intensifiers.txt",
    "negations": "negations.txt",
    "contrasts_coordinating": "contrasts_coordinating.txt",
    "contrasts_subordinating": "contrasts_subordinating.txt",
}


def data_path(*parts) -> Path:
    return Path(str(resources.files("senticlust").joinpath("data", *parts)))


def bundled_lexicon_path() -> Path:
    return data_path("sample_lexicon.tsv")


def bundled_corpus_path() -> Path:
    return data_path("sample_corpus.csv")


@dataclass
class RunConfig:
    lexicon_path: Path | None = None
    corpus_path: Path | None = None
    corpus_format: str = "csv"  # "dir" or "csv"
    output_dir: Path = Path("senticlust-out")
    intensifiers_path: Path | None = None
    negations_path: Path | None = None
    contrasts_coordinating_path: Path | None = None
    contrasts_subordinating_path: Path | None = None
    general_dictionary_path: Path | None = None
    negation_scope: int = 5
    neutral_epsilon: float = 0.0
    synonym_tolerance: float = 0.01
    swn_combine: str = "multiply"
    schemes: tuple[str, ...] | None = None
    max_iterations: int = 100
    jobs: int = 1
    spellcheck: bool = True
    language_threshold: float = 0.30
    strict_eq7: bool = False
    per_class: bool = False
    dump_features: Path | None = None
    dump_matrices: Path | None = None

    def validate(self) -> None:
        if self.lexicon_path is None:
            raise ConfigError("no lexicon file given; use --lexicon or SENTI_LEXICON")
        if not Path(self.lexicon_path).is_file():
            raise ConfigError(f"--lexicon file not found: {self.lexicon_path}")
        if self.corpus_path is None:
            raise ConfigError("no corpus given; use --corpus")
        corpus = Path(self.corpus_path)
        if self.corpus_format not in ("dir", "csv"):
            raise ConfigError(f"--format must be 'dir' or 'csv', not {self.corpus_format!r}")
        if self.corpus_format == "dir" and not corpus.is_dir():
            raise ConfigError(f"--corpus directory not found: {corpus}")
        if self.corpus_format == "csv" and not corpus.is_file():
            raise ConfigError(f"--corpus file not found: {corpus}")
        if self.negation_scope < 1:
            raise ConfigError("--negation-scope must be >= 1")
        if self.max_iterations < 1:
            raise ConfigError("--max-iter must be >= 1")
        if self.jobs < 1:
            raise ConfigError("--jobs must be >= 1")
        if self.neutral_epsilon < 0:
            raise ConfigError("neutral_epsilon must be >= 0")
        if self.synonym_tolerance < 0:
            raise ConfigError("synonym_tolerance must be >= 0")
        if self.swn_combine not in SWN_COMBINE_MODES:
            raise ConfigError(
                f"swn_combine must be one of {SWN_COMBINE_MODES}, not {self.swn_combine!r}"
            )
        if self.schemes is not None:
            unknown = set(self.schemes) - set(ALL_SCHEMES)
            if unknown:
                raise ConfigError(f"unknown --schemes labels: {sorted(unknown)}")
        for name in (
            "intensifiers_path",
            "negations_path",
            "contrasts_coordinating_path",
            "contrasts_subordinating_path",
            "general_dictionary_path",
        ):
            value = getattr(self, name)
            if value is not None and not Path(value).is_file():
                raise ConfigError(f"{name.replace('_', '-')} file not found: {value}")


_BOOL_FIELDS = {"spellcheck", "strict_eq7", "per_class"}
_INT_FIELDS = {"negation_scope", "max_iterations", "jobs"}
_FLOAT_FIELDS = {"neutral_epsilon", "synonym_tolerance", "language_threshold"}
_PATH_FIELDS = {
    "lexicon_path",
    "corpus_path",
    "output_dir",
    "intensifiers_path",
    "negations_path",
    "contrasts_coordinating_path",
    "contrasts_subordinating_path",
    "general_dictionary_path",
    "dump_features",
    "dump_matrices",
}


def parse_config_file(path) -> dict[str, object]:
    """Read `key = value` lines into typed RunConfig field values."""
    known = {f.name for f in fields(RunConfig)}
    values: dict[str, object] = {}
    with open(path, encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, value = line.partition("=")
            if not sep:
                raise ConfigError(f"{path}: line {line_no}: expected 'key = value'")
            key = key.strip().replace("-", "_")
            value = value.strip()
            if key not in known:
                raise ConfigError(f"{path}: line {line_no}: unknown key {key!r}")
            values[key] = _coerce(key, value)
    return values


def _coerce(key: str, value: str) -> object:
    if key in _BOOL_FIELDS:
        lowered = value.lower()
        if lowered in ("1", "true", "yes", "on"):
            return True
        if lowered in ("0", "false", "no", "off"):
            return False
        raise ConfigError(f"{key} wants a boolean, not {value!r}")
    if key in _INT_FIELDS:
        return int(value)
    if key in _FLOAT_FIELDS:
        return float(value)
    if key in _PATH_FIELDS:
        return Path(value)
    if key == "schemes":
        return tuple(s.strip() for s in value.split(",") if s.strip())
    return value


def load_word_list(path) -> tuple[str, ...]:
    """One term per line; '#' comments and blank lines skipped."""
    terms = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            term = line.strip().lower()
            if term and not term.startswith("#"):
                terms.append(term)
    return tuple(terms)


def load_word_lists(config: RunConfig) -> WordLists:
    def pick(attr: str, default_file: str) -> tuple[str, ...]:
        path = getattr(config, attr)
        if path is None:
            path = data_path("wordlists", default_file)
        return load_word_list(path)

    return WordLists(
        intensifiers=pick("intensifiers_path", _WORDLIST_FILES["intensifiers"]),
        negations=pick("negations_path", _WORDLIST_FILES["negations"]),
        contrasts_coordinating=pick(
            "contrasts_coordinating_path", _WORDLIST_FILES["contrasts_coordinating"]
        ),
        contrasts_subordinating=pick(
            "contrasts_subordinating_path", _WORDLIST_FILES["contrasts_subordinating"]
        ),
        negation_scope=config.negation_scope,
    )


def load_general_words(config: RunConfig) -> frozenset[str]:
    path = config.general_dictionary_path or data_path("english_words.txt")
    return frozenset(load_word_list(path))
