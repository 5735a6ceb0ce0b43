"""Exception types shared across the pipeline."""


class SentiClustError(Exception):
    """Base class for every error raised by this package."""


class ParseError(SentiClustError):
    """A lexicon line could not be parsed; carries the 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class EmptyLexicon(SentiClustError):
    """The lexicon contains no adjective or adverb entries."""


class NoOppositePolarity(SentiClustError):
    """Antonym construction needs both positive and negative lemmas."""


class EmptyCorpus(SentiClustError):
    """Every review was removed during preparation."""


class EmptyFeatureSet(SentiClustError):
    """No adjective/adverb feature survived extraction or reduction."""


class DegenerateSeed(SentiClustError):
    """One of the two polar seed documents would be empty."""


class ZeroSeedRow(SentiClustError):
    """A seed row has zero norm in the matrix handed to the clusterer."""


class AllClassifiersRejected(SentiClustError):
    """Every component classifier put both seeds in the same cluster."""


class NoGoldLabels(SentiClustError):
    """Evaluation was requested but no document carries a gold label."""


class UnknownDocId(SentiClustError):
    """The requested document id does not exist in the run outputs."""


class ConfigError(SentiClustError):
    """Invalid or missing run configuration."""
