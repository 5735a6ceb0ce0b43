"""Command-line entry points.

senticlust run         ingest a corpus, run both phases, write outputs
senticlust inspect     show one document's rewrite history and votes
senticlust dump-dicts  export the derived dictionaries for inspection

Exit codes: 0 success, 2 configuration error, 3 pipeline error,
4 unknown document id.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import fields
from pathlib import Path

from . import config as config_mod
from . import lexicon as lexicon_mod
from . import outputs
from .clustering import REJECTED
from .config import ENV_LEXICON, RunConfig
from .contextual import ContextualConfig, run_contextual_pipeline
from .ensemble import FLAG_SEED, EnsembleConfig, classifier_label, run_ensemble
from .errors import ConfigError, SentiClustError, UnknownDocId
from .evaluate import confusion, metrics, negative_class_metrics
from .features import build_seeds, extract_features, reduce_neutral
from .ingest import read_corpus
from .language import LanguageDetector
from .vsm import build_all, dump_matrix

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_PIPELINE = 3
EXIT_UNKNOWN_DOC = 4


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="senticlust",
        description="Unsupervised sentiment classification of review corpora.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--config", type=Path, help="key = value config file; flags win")
        p.add_argument("--lexicon", type=Path, help=f"lexicon file (or ${ENV_LEXICON})")
        p.add_argument("--output", type=Path, help="output directory")
        p.add_argument("--neutral-epsilon", type=float, help="|score| <= eps is neutral")
        p.add_argument("--synonym-tolerance", type=float, help="max synonym score gap")

    run = sub.add_parser("run", help="run the full pipeline on a corpus")
    add_common(run)
    run.add_argument("--corpus", type=Path, help="corpus file or directory")
    run.add_argument("--format", choices=("dir", "csv"), help="corpus layout")
    run.add_argument("--no-spellcheck", action="store_true", help="skip spelling repair")
    run.add_argument("--negation-scope", type=int, help="tokens a negation covers")
    run.add_argument("--swn-combine", choices=("multiply", "add", "append"))
    run.add_argument("--schemes", help="comma-separated scheme labels to keep")
    run.add_argument("--max-iter", type=int, help="k-means iteration cap")
    run.add_argument("--jobs", type=int, help="parallel clustering jobs")
    run.add_argument("--strict-eq7", action="store_true",
                     help="also report the literal row-share accuracy")
    run.add_argument("--per-class", action="store_true",
                     help="report negative-class precision/recall/F too")
    run.add_argument("--dump-features", type=Path, help="write the feature list as TSV")
    run.add_argument("--dump-matrices", type=Path, help="write all matrices to a directory")
    run.add_argument("--general-dictionary", type=Path, help="spelling wordlist file")
    run.add_argument("--intensifiers", type=Path, help="intensifier list file")
    run.add_argument("--negations", type=Path, help="negation list file")
    run.add_argument("--contrasts-coordinating", type=Path)
    run.add_argument("--contrasts-subordinating", type=Path)

    inspect = sub.add_parser("inspect", help="show one document from a previous run")
    inspect.add_argument("doc_id", type=int)
    inspect.add_argument("--output", type=Path, help="output directory of the run")
    inspect.add_argument("--config", type=Path)

    dump = sub.add_parser("dump-dicts", help="export vocabulary and dictionaries")
    add_common(dump)
    return parser


_FLAG_TO_FIELD = {
    "lexicon": "lexicon_path",
    "corpus": "corpus_path",
    "format": "corpus_format",
    "output": "output_dir",
    "max_iter": "max_iterations",
    "general_dictionary": "general_dictionary_path",
    "intensifiers": "intensifiers_path",
    "negations": "negations_path",
    "contrasts_coordinating": "contrasts_coordinating_path",
    "contrasts_subordinating": "contrasts_subordinating_path",
}


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    values: dict[str, object] = {}
    if getattr(args, "config", None) is not None:
        if not Path(args.config).is_file():
            raise ConfigError(f"--config file not found: {args.config}")
        values.update(config_mod.parse_config_file(args.config))
    field_names = {f.name for f in fields(RunConfig)}
    for key, value in vars(args).items():
        if key in ("command", "config", "doc_id") or value in (None, False):
            continue
        if key == "no_spellcheck":
            values["spellcheck"] = False
            continue
        if key == "schemes":
            values["schemes"] = tuple(s.strip() for s in str(value).split(",") if s.strip())
            continue
        name = _FLAG_TO_FIELD.get(key, key)
        if name in field_names:
            values[name] = value
    if "lexicon_path" not in values and os.environ.get(ENV_LEXICON):
        values["lexicon_path"] = Path(os.environ[ENV_LEXICON])
    return RunConfig(**values)


def _build_dictionaries(config: RunConfig):
    entries = lexicon_mod.parse_lexicon(config.lexicon_path)
    vocab = lexicon_mod.average_scores(entries, neutral_epsilon=config.neutral_epsilon)
    synonyms = lexicon_mod.build_synonym_dict(vocab, tolerance=config.synonym_tolerance)
    antonyms = lexicon_mod.build_antonym_dict(vocab)
    return vocab, synonyms, antonyms


def cmd_run(config: RunConfig) -> int:
    config.validate()
    out_dir = Path(config.output_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    vocab, synonyms, antonyms = _build_dictionaries(config)
    contextual_config = ContextualConfig(
        vocab=vocab,
        synonyms=synonyms,
        antonyms=antonyms,
        word_lists=config_mod.load_word_lists(config),
        general_words=config_mod.load_general_words(config),
        detector=LanguageDetector.bundled(threshold=config.language_threshold),
        spellcheck=config.spellcheck,
    )
    reviews = read_corpus(config.corpus_path, config.corpus_format)
    docs = run_contextual_pipeline(reviews, contextual_config)

    features = extract_features(docs, vocab)
    features = reduce_neutral(features, vocab)
    seeds = build_seeds(features, vocab, docs)
    if config.dump_features is not None:
        with open(config.dump_features, "w", encoding="utf-8") as fh:
            fh.write("feature\tfinal_score\n")
            for lemma in features:
                fh.write(f"{lemma}\t{vocab.final_score(lemma):.17g}\n")

    matrices = build_all(
        docs,
        features,
        vocab,
        seed_positive_id=seeds.positive_seed.doc_id,
        seed_negative_id=seeds.negative_seed.doc_id,
        schemes=config.schemes,
        swn_combine=config.swn_combine,
    )
    if config.dump_matrices is not None:
        matrix_dir = Path(config.dump_matrices)
        matrix_dir.mkdir(parents=True, exist_ok=True)
        for matrix in matrices:
            dump_matrix(matrix, matrix_dir / f"{matrix.scheme}.tsv")

    results, verdict = run_ensemble(
        matrices, EnsembleConfig(max_iterations=config.max_iterations, jobs=config.jobs)
    )

    paths = outputs.output_paths(out_dir)
    outputs.write_labels(paths["labels"], verdict, docs)
    outputs.write_classifiers(paths["classifiers"], results)
    outputs.write_votes(paths["votes"], results, sorted(verdict.verdicts))
    outputs.write_provenance(paths["provenance"], docs)

    gold = {d.doc_id: d.gold_label for d in docs if d.gold_label and not d.is_seed}
    if gold:
        report_rows = []
        literal = {} if config.strict_eq7 else None
        per_class = {} if config.per_class else None
        for result in results:
            predicted = {
                doc_id: label
                for doc_id in gold
                if (label := _result_label(result, doc_id)) is not None
            }
            if not predicted:
                continue
            cm = confusion(predicted, {i: gold[i] for i in predicted})
            report_rows.append((result.scheme, metrics(cm), result.iterations_used, result.seconds))
            if literal is not None:
                literal[result.scheme] = metrics(cm, strict_literal=True).accuracy
            if per_class is not None:
                per_class[result.scheme] = negative_class_metrics(cm)
        ensemble_pred = {i: verdict.verdicts[i].label for i in gold}
        ensemble_cm = confusion(ensemble_pred, gold)
        ensemble_metrics = metrics(ensemble_cm)
        report_rows.append(("Ensemble", ensemble_metrics, 0, 0.0))
        if literal is not None:
            literal["Ensemble"] = metrics(ensemble_cm, strict_literal=True).accuracy
        if per_class is not None:
            per_class["Ensemble"] = negative_class_metrics(ensemble_cm)
        outputs.write_report(paths["report"], report_rows, per_class, literal)
        print(
            f"ensemble accuracy {ensemble_metrics.accuracy:.4f} over {ensemble_cm.total} "
            f"gold-labelled document(s)"
        )

    print(
        f"{len(docs)} document(s) (incl. 2 seeds), {len(features)} feature(s), "
        f"{len(matrices)} classifier(s): {verdict.accepted_classifiers} accepted, "
        f"{verdict.rejected_classifiers} rejected"
    )
    print(f"outputs in {out_dir}")
    return EXIT_OK


def _result_label(result, doc_id):
    if result.interpretation == REJECTED:
        return None
    return classifier_label(result, doc_id)


def cmd_inspect(output_dir, doc_id: int) -> int:
    paths = outputs.output_paths(output_dir)
    for key in ("labels", "votes", "provenance"):
        if not paths[key].is_file():
            raise ConfigError(f"missing {paths[key]}; run `senticlust run` first")
    labels = outputs.read_labels(paths["labels"])
    if doc_id not in labels:
        raise UnknownDocId(f"doc id {doc_id} not found in {paths['labels']}")
    row = labels[doc_id]
    flags = row.get("flags", "")
    if FLAG_SEED in flags.split(","):
        print(f"doc {doc_id} [SEED] (excluded from evaluation)")
    else:
        print(f"doc {doc_id} (source: {row.get('source_id', '')})")
    print("provenance:")
    for step in outputs.read_provenance(paths["provenance"]).get(doc_id, []):
        print(f"  {step}")
    print("votes:")
    for scheme, vote_label in outputs.read_votes(paths["votes"]).get(doc_id, []):
        print(f"  {scheme}\t{vote_label}")
    print(
        f"final label: {row['label']} "
        f"(+{row['pos_votes']} / -{row['neg_votes']}, {row['abstains']} abstained)"
    )
    return EXIT_OK


def cmd_dump_dicts(config: RunConfig) -> int:
    if config.lexicon_path is None:
        raise ConfigError("no lexicon file given; use --lexicon or SENTI_LEXICON")
    if not Path(config.lexicon_path).is_file():
        raise ConfigError(f"--lexicon file not found: {config.lexicon_path}")
    out_dir = Path(config.output_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    vocab, synonyms, antonyms = _build_dictionaries(config)
    lexicon_mod.dump_vocabulary(vocab, out_dir / "vocabulary.tsv")
    lexicon_mod.dump_replacements(synonyms, vocab, out_dir / "synonyms.tsv")
    lexicon_mod.dump_replacements(antonyms, vocab, out_dir / "antonyms.tsv")
    print(f"wrote vocabulary.tsv, synonyms.tsv, antonyms.tsv to {out_dir}")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "run":
            return cmd_run(_config_from_args(args))
        if args.command == "inspect":
            output_dir = args.output
            if output_dir is None and args.config is not None:
                file_values = config_mod.parse_config_file(args.config)
                output_dir = file_values.get("output_dir")
            if output_dir is None:
                output_dir = RunConfig().output_dir
            return cmd_inspect(output_dir, args.doc_id)
        if args.command == "dump-dicts":
            return cmd_dump_dicts(_config_from_args(args))
        raise ConfigError(f"unknown command {args.command!r}")
    except ConfigError as exc:
        print(f"senticlust: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except UnknownDocId as exc:
        print(f"senticlust: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN_DOC
    except SentiClustError as exc:
        print(f"senticlust: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PIPELINE


if __name__ == "__main__":
    sys.exit(main())
