"""Confusion-matrix scoring of predicted labels against gold labels.

The matrix is laid out by predicted row: the positive-predicted row splits
into false positives and true positives, the negative-predicted row into
true negatives and false negatives. Accuracy is correct-over-total; the
paper's literal accuracy expression reads as the positive-predicted row
share under this layout, so it is kept behind `strict_literal` for
comparison rather than silently adopted.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NoGoldLabels
from .lexicon import NEGATIVE, POSITIVE


@dataclass(frozen=True)
class ConfusionMatrix:
    false_positive: int  # predicted positive, actually negative
    true_positive: int  # predicted positive, actually positive
    true_negative: int  # predicted negative, actually negative
    false_negative: int  # predicted negative, actually positive

    @property
    def total(self) -> int:
        return self.false_positive + self.true_positive + self.true_negative + self.false_negative


@dataclass(frozen=True)
class Metrics:
    accuracy: float
    precision: float
    recall: float
    f_measure: float


def confusion(predicted: dict[int, str], gold: dict[int, str]) -> ConfusionMatrix:
    """Count the four cells over documents that carry a gold label.

    Callers exclude seed documents before calling (seeds carry no gold
    label, so passing a gold map keyed by real documents suffices).
    """
    fp = tp = tn = fn = 0
    for doc_id, actual in gold.items():
        if doc_id not in predicted:
            continue
        pred = predicted[doc_id]
        if pred == POSITIVE:
            if actual == POSITIVE:
                tp += 1
            else:
                fp += 1
        else:
            if actual == NEGATIVE:
                tn += 1
            else:
                fn += 1
    cm = ConfusionMatrix(fp, tp, tn, fn)
    if cm.total == 0:
        raise NoGoldLabels("no gold-labelled documents to score")
    return cm


def metrics(cm: ConfusionMatrix, strict_literal: bool = False) -> Metrics:
    """Accuracy, precision, recall, and F-measure for the positive class.

    strict_literal swaps in the paper's literal accuracy expression (the
    positive-predicted row share) for comparison.
    """
    total = cm.total
    if total < 1:
        raise ValueError("empty confusion matrix")
    if strict_literal:
        accuracy = (cm.false_positive + cm.true_positive) / total
    else:
        accuracy = (cm.true_positive + cm.true_negative) / total
    predicted_pos = cm.false_positive + cm.true_positive
    actual_pos = cm.true_positive + cm.false_negative
    precision = cm.true_positive / predicted_pos if predicted_pos else 0.0
    recall = cm.true_positive / actual_pos if actual_pos else 0.0
    f_measure = (
        2 * precision * recall / (precision + recall) if precision + recall > 0 else 0.0
    )
    return Metrics(accuracy, precision, recall, f_measure)


def negative_class_metrics(cm: ConfusionMatrix) -> Metrics:
    """Same scores with negative as the target class."""
    flipped = ConfusionMatrix(
        false_positive=cm.false_negative,
        true_positive=cm.true_negative,
        true_negative=cm.true_positive,
        false_negative=cm.false_positive,
    )
    return metrics(flipped)
