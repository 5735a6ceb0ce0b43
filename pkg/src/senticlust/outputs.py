"""TSV writers and readers for run outputs.

labels.tsv       one row per document: final label and vote tally
classifiers.tsv  one row per component classifier
report.tsv       per-classifier and ensemble evaluation scores
votes.tsv        per-document, per-classifier vote (for `inspect`)
provenance.tsv   per-document rewrite history (for `inspect`)
"""

from __future__ import annotations

from pathlib import Path

from .clustering import REJECTED, ClusterResult
from .contextual import Document
from .ensemble import FLAG_SEED, EnsembleVerdict, classifier_label
from .evaluate import Metrics

LABELS_FILE = "labels.tsv"
CLASSIFIERS_FILE = "classifiers.tsv"
REPORT_FILE = "report.tsv"
VOTES_FILE = "votes.tsv"
PROVENANCE_FILE = "provenance.tsv"


def write_labels(path, verdict: EnsembleVerdict, docs: list[Document]) -> None:
    by_id = {d.doc_id: d for d in docs}
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("doc_id\tsource_id\tlabel\tpos_votes\tneg_votes\tabstains\tflags\n")
        for doc_id in sorted(verdict.verdicts):
            v = verdict.verdicts[doc_id]
            doc = by_id.get(doc_id)
            source = doc.source_id if doc else ""
            flags = list(v.flags)
            if doc is not None and doc.is_seed:
                flags.append(FLAG_SEED)
            fh.write(
                f"{v.doc_id}\t{source}\t{v.label}\t{v.pos_votes}\t{v.neg_votes}"
                f"\t{v.abstains}\t{','.join(flags)}\n"
            )


def read_labels(path) -> dict[int, dict[str, str]]:
    rows: dict[int, dict[str, str]] = {}
    with open(path, encoding="utf-8") as fh:
        header = fh.readline().rstrip("\n").split("\t")
        for line in fh:
            cells = line.rstrip("\n").split("\t")
            row = dict(zip(header, cells))
            rows[int(row["doc_id"])] = row
    return rows


def write_classifiers(path, results: list[ClusterResult]) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("scheme\titerations\tinterpretation\tabstains\n")
        for r in results:
            fh.write(f"{r.scheme}\t{r.iterations_used}\t{r.interpretation}\t{r.abstained}\n")


def write_votes(path, results: list[ClusterResult], doc_ids) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("doc_id\tscheme\tvote\n")
        for doc_id in doc_ids:
            for r in results:
                # rejected classifiers show as 'rejected' so the file stays rectangular
                if r.interpretation == REJECTED:
                    fh.write(f"{doc_id}\t{r.scheme}\t{REJECTED}\n")
                    continue
                label = classifier_label(r, doc_id)
                fh.write(f"{doc_id}\t{r.scheme}\t{label if label else 'abstain'}\n")


def read_votes(path) -> dict[int, list[tuple[str, str]]]:
    votes: dict[int, list[tuple[str, str]]] = {}
    with open(path, encoding="utf-8") as fh:
        fh.readline()
        for line in fh:
            doc_id, scheme, label = line.rstrip("\n").split("\t")
            votes.setdefault(int(doc_id), []).append((scheme, label))
    return votes


def write_provenance(path, docs: list[Document]) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("doc_id\tstep\n")
        for doc in sorted(docs, key=lambda d: d.doc_id):
            for record in doc.provenance:
                fh.write(f"{doc.doc_id}\t{record}\n")


def read_provenance(path) -> dict[int, list[str]]:
    chains: dict[int, list[str]] = {}
    with open(path, encoding="utf-8") as fh:
        fh.readline()
        for line in fh:
            doc_id, _, step = line.rstrip("\n").partition("\t")
            chains.setdefault(int(doc_id), []).append(step)
    return chains


def write_report(
    path,
    rows: list[tuple[str, Metrics, int, float]],
    per_class_rows: dict[str, Metrics] | None = None,
    literal_accuracy: dict[str, float] | None = None,
) -> None:
    """rows: (scheme, metrics, iterations, seconds); the last row may be the ensemble."""
    extra = "\taccuracy_literal_row_share" if literal_accuracy else ""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(
            "scheme\taccuracy\tprecision\trecall\tf_measure\titerations\ttime_seconds"
            + extra
            + "\n"
        )
        for scheme, m, iterations, seconds in rows:
            line = (
                f"{scheme}\t{m.accuracy:.4f}\t{m.precision:.4f}\t{m.recall:.4f}"
                f"\t{m.f_measure:.4f}\t{iterations}\t{int(round(seconds))}"
            )
            if literal_accuracy:
                line += f"\t{literal_accuracy.get(scheme, float('nan')):.4f}"
            fh.write(line + "\n")
        if per_class_rows:
            fh.write("# negative-class scores\n")
            for scheme, m in per_class_rows.items():
                fh.write(
                    f"{scheme}\t{m.accuracy:.4f}\t{m.precision:.4f}\t{m.recall:.4f}"
                    f"\t{m.f_measure:.4f}\t-\t-"
                    + ("\t-" if literal_accuracy else "")
                    + "\n"
                )


def output_paths(output_dir) -> dict[str, Path]:
    out = Path(output_dir)
    return {
        "labels": out / LABELS_FILE,
        "classifiers": out / CLASSIFIERS_FILE,
        "report": out / REPORT_FILE,
        "votes": out / VOTES_FILE,
        "provenance": out / PROVENANCE_FILE,
    }
