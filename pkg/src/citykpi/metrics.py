"""Confusion-matrix algebra, classification reports, log loss, ROC/AUC.

Counts are kept as exact integers; every derived metric is a pure function
of the matrix. Zero-denominator metrics return 0 by convention and set a
warning flag on the report instead of producing NaN.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import (
    EmptyMatrixError,
    LengthMismatchError,
    SingleClassError,
    ZeroWeightsError,
)

LOG_LOSS_CLIP = 1e-15


@dataclass(frozen=True)
class ConfusionMatrix:
    """2x2 counts; rows = actual class {0,1}, columns = predicted class {0,1}."""

    counts: tuple[tuple[int, int], tuple[int, int]]

    @property
    def total(self) -> int:
        return sum(sum(row) for row in self.counts)

    # Class-1-positive convention.
    @property
    def tp(self) -> int:
        return self.counts[1][1]

    @property
    def tn(self) -> int:
        return self.counts[0][0]

    @property
    def fp(self) -> int:
        return self.counts[0][1]

    @property
    def fn(self) -> int:
        return self.counts[1][0]

    def to_dict(self) -> dict:
        return {"counts": [list(self.counts[0]), list(self.counts[1])]}


@dataclass(frozen=True)
class ClassMetrics:
    precision: float
    recall: float
    f1: float
    support: int

    def to_dict(self) -> dict:
        return {
            "precision": self.precision,
            "recall": self.recall,
            "f1": self.f1,
            "support": self.support,
        }


@dataclass(frozen=True)
class Report:
    per_class: dict[int, ClassMetrics]
    accuracy: float
    macro_avg: ClassMetrics
    weighted_avg: ClassMetrics
    zero_division: bool

    def to_dict(self) -> dict:
        return {
            "classes": {str(k): m.to_dict() for k, m in self.per_class.items()},
            "accuracy": self.accuracy,
            "macro_avg": self.macro_avg.to_dict(),
            "weighted_avg": self.weighted_avg.to_dict(),
            "zero_division": self.zero_division,
        }


@dataclass(frozen=True)
class WeightSpec:
    w1: float
    w2: float
    w3: float


@dataclass(frozen=True)
class RocCurve:
    """Points ordered from (0,0) to (1,1); thresholds[0] is +inf."""

    points: tuple[tuple[float, float], ...]
    thresholds: tuple[float, ...]

    def to_dict(self) -> dict:
        return {
            "points": [[fpr, tpr] for fpr, tpr in self.points],
            "thresholds": [None if math.isinf(t) else t for t in self.thresholds],
        }


def _check_binary(values: Sequence[int], name: str) -> list[int]:
    out = []
    for v in values:
        iv = int(v)
        if iv != v or iv not in (0, 1):
            raise ValueError(f"{name} must contain only 0/1, got {v!r}")
        out.append(iv)
    return out


def confusion(y_true: Sequence[int], y_pred: Sequence[int]) -> ConfusionMatrix:
    """counts[a][p] = |{i : y_true_i = a, y_pred_i = p}|."""
    if len(y_true) != len(y_pred):
        raise LengthMismatchError(f"{len(y_true)} labels vs {len(y_pred)} predictions")
    yt = _check_binary(y_true, "y_true")
    yp = _check_binary(y_pred, "y_pred")
    c = [[0, 0], [0, 0]]
    for a, p in zip(yt, yp):
        c[a][p] += 1
    return ConfusionMatrix(counts=((c[0][0], c[0][1]), (c[1][0], c[1][1])))


def accuracy(cm: ConfusionMatrix) -> float:
    if cm.total == 0:
        raise EmptyMatrixError("confusion matrix has no samples")
    return (cm.tp + cm.tn) / cm.total


def class_metrics(cm: ConfusionMatrix, positive_class: int) -> ClassMetrics:
    """Precision/recall/F1 treating `positive_class` as positive; 0 on 0/0."""
    k = positive_class
    tp = cm.counts[k][k]
    fp = cm.counts[1 - k][k]
    fn = cm.counts[k][1 - k]
    precision = tp / (tp + fp) if tp + fp > 0 else 0.0
    recall = tp / (tp + fn) if tp + fn > 0 else 0.0
    f1 = 2 * precision * recall / (precision + recall) if precision + recall > 0 else 0.0
    support = cm.counts[k][0] + cm.counts[k][1]
    return ClassMetrics(precision=precision, recall=recall, f1=f1, support=support)


def report_from_confusion(cm: ConfusionMatrix) -> Report:
    if cm.total == 0:
        raise EmptyMatrixError("confusion matrix has no samples")
    per_class = {k: class_metrics(cm, k) for k in (0, 1)}
    m0, m1 = per_class[0], per_class[1]
    n = cm.total
    macro = ClassMetrics(
        precision=(m0.precision + m1.precision) / 2,
        recall=(m0.recall + m1.recall) / 2,
        f1=(m0.f1 + m1.f1) / 2,
        support=n,
    )
    weighted = ClassMetrics(
        precision=(m0.support * m0.precision + m1.support * m1.precision) / n,
        recall=(m0.support * m0.recall + m1.support * m1.recall) / n,
        f1=(m0.support * m0.f1 + m1.support * m1.f1) / n,
        support=n,
    )
    zero_division = any(
        (cm.counts[1 - k][k] + cm.counts[k][k] == 0) or (m.support == 0)
        for k, m in per_class.items()
    )
    return Report(
        per_class=per_class,
        accuracy=accuracy(cm),
        macro_avg=macro,
        weighted_avg=weighted,
        zero_division=zero_division,
    )


def report(y_true: Sequence[int], y_pred: Sequence[int]) -> Report:
    return report_from_confusion(confusion(y_true, y_pred))


def weighted_score(m: ClassMetrics, w: WeightSpec) -> float:
    """(w1*precision + w2*recall + w3*f1) / (w1 + w2 + w3)."""
    if min(w.w1, w.w2, w.w3) < 0:
        raise ValueError("weights must be nonnegative")
    total = w.w1 + w.w2 + w.w3
    if total == 0:
        raise ZeroWeightsError("weights must not all be zero")
    return (w.w1 * m.precision + w.w2 * m.recall + w.w3 * m.f1) / total


def log_loss(y_true: Sequence[int], probs: Sequence[float]) -> float:
    """Mean binary cross-entropy; probabilities clipped to [1e-15, 1-1e-15]."""
    if len(y_true) != len(probs):
        raise LengthMismatchError(f"{len(y_true)} labels vs {len(probs)} probabilities")
    yt = _check_binary(y_true, "y_true")
    total = 0.0
    for y, p in zip(yt, probs):
        p = min(max(float(p), LOG_LOSS_CLIP), 1.0 - LOG_LOSS_CLIP)
        total += math.log(p) if y == 1 else math.log(1.0 - p)
    return -total / len(yt)


def roc_auc(y_true: Sequence[int], scores: Sequence[float]) -> tuple[RocCurve, float]:
    """ROC over descending unique score thresholds and trapezoidal AUC.

    Tied scores enter the curve at the same threshold step, which makes the
    trapezoidal area equal P(score_pos > score_neg) + 0.5 * P(tie).
    """
    if len(y_true) != len(scores):
        raise LengthMismatchError(f"{len(y_true)} labels vs {len(scores)} scores")
    yt = _check_binary(y_true, "y_true")
    pos = sum(yt)
    neg = len(yt) - pos
    if pos == 0 or neg == 0:
        raise SingleClassError("ROC needs both classes present")

    order = sorted(range(len(yt)), key=lambda i: -float(scores[i]))
    points = [(0.0, 0.0)]
    thresholds = [math.inf]
    tp = fp = 0
    i = 0
    while i < len(order):
        s = float(scores[order[i]])
        while i < len(order) and float(scores[order[i]]) == s:
            if yt[order[i]] == 1:
                tp += 1
            else:
                fp += 1
            i += 1
        points.append((fp / neg, tp / pos))
        thresholds.append(s)

    auc = 0.0
    for (x0, y0), (x1, y1) in zip(points, points[1:]):
        auc += (x1 - x0) * (y0 + y1) / 2.0
    return RocCurve(points=tuple(points), thresholds=tuple(thresholds)), auc
