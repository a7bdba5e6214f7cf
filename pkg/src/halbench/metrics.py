"""Precision-recall evaluation: PR curve, average precision, recall@precision.

All functions are pure and operate on a vector of positive-class scores and a
boolean label vector.  Score ties are grouped into a single operating point so
the curve is well-defined when a classifier emits duplicate probabilities.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class UndefinedMetricError(ValueError):
    """Raised when a metric is undefined, e.g. no positive labels exist."""


@dataclass(frozen=True)
class PrCurve:
    """Operating points in descending-threshold order, one per distinct score.

    At point i, every example with score >= thresholds[i] is predicted
    positive; tp/fp/fn are the resulting counts.  ``positives`` is the total
    positive count (tp + fn at every point).
    """

    thresholds: np.ndarray
    precision: np.ndarray
    recall: np.ndarray
    tp: np.ndarray
    fp: np.ndarray
    fn: np.ndarray
    positives: int


def pr_curve(scores: np.ndarray, labels: np.ndarray) -> PrCurve:
    """Build the precision-recall curve for binary labels.

    Parameters
    ----------
    scores : positive-class score per example (higher = more positive)
    labels : boolean array, True for positive examples

    Precision at zero predictions is taken to be 1 by convention; it only
    appears implicitly as the curve's left anchor.
    """
    scores = np.asarray(scores, dtype=np.float64)
    labels = np.asarray(labels, dtype=bool)
    if scores.shape != labels.shape or scores.ndim != 1:
        raise ValueError(f"scores/labels must be equal-length 1-D arrays, got {scores.shape} and {labels.shape}")
    positives = int(np.count_nonzero(labels))
    if positives == 0:
        raise UndefinedMetricError("PR curve undefined: no positive labels")

    order = np.argsort(-scores, kind="stable")
    sorted_scores = scores[order]
    sorted_labels = labels[order]

    # Last index of each group of tied scores.
    distinct = np.flatnonzero(np.diff(sorted_scores) != 0)
    group_ends = np.concatenate([distinct, [len(scores) - 1]])

    cum_tp = np.cumsum(sorted_labels)[group_ends].astype(np.int64)
    predicted = group_ends + 1
    tp = cum_tp
    fp = predicted - cum_tp
    fn = positives - tp
    return PrCurve(
        thresholds=sorted_scores[group_ends],
        precision=tp / predicted,
        recall=tp / positives,
        tp=tp,
        fp=fp,
        fn=fn,
        positives=positives,
    )


def auc_pr(curve: PrCurve) -> float:
    """Area under the PR curve as average precision (step integration).

    Sum over operating points, in descending-threshold order, of
    (recall_i - recall_{i-1}) * precision_i with recall_{-1} = 0.
    """
    deltas = np.diff(curve.recall, prepend=0.0)
    return float(np.sum(deltas * curve.precision))


def recall_at_precision(curve: PrCurve, precision_floor: float) -> float:
    """Maximum recall among operating points with precision >= the floor.

    Returns 0.0 when no operating point reaches the floor; a defined value
    keeps averaged curves total across repetitions.
    """
    if not 0.0 < precision_floor <= 1.0:
        raise ValueError(f"precision_floor must be in (0, 1], got {precision_floor}")
    qualifying = curve.recall[curve.precision >= precision_floor]
    if qualifying.size == 0:
        return 0.0
    return float(qualifying.max())
