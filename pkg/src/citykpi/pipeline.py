"""End-to-end drivers shared by the CLI and the HTTP service.

One pipeline run is: drop_missing -> split_xy -> train_test_split ->
standardize on the training rows -> fit -> evaluate on the held-out rows.
Test-set probabilities are kept with the result so threshold what-ifs can
be answered without retraining.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .analytics import (
    group_means,
    histogram,
    holt_fit_forecast,
    iqr_outliers,
    pearson_matrix,
)
from .data import MISSING, Dataset, FeatureMatrix, LabelVector
from .errors import EmptyResultError
from .metrics import confusion, log_loss, report_from_confusion, roc_auc
from .models import (
    MODEL_KINDS,
    TrainConfig,
    TrainedModel,
    build_trained_model,
    fit_model,
    model_id,
)
from .preprocess import drop_missing, split_xy, standardize_apply, standardize_fit, train_test_split


@dataclass(frozen=True)
class Evaluation:
    """Held-out labels and model probabilities, plus threshold-free metrics."""

    y_true: tuple[int, ...]
    probs: tuple[float, ...]
    auc: float
    log_loss: float

    def metrics_at(self, threshold: float) -> dict:
        preds = [1 if p >= threshold else 0 for p in self.probs]
        cm = confusion(self.y_true, preds)
        rep = report_from_confusion(cm)
        curve, auc = roc_auc(self.y_true, self.probs)
        return {
            "threshold": threshold,
            "report": rep.to_dict(),
            "confusion": cm.to_dict(),
            "roc": curve.to_dict(),
            "auc": auc,
            "log_loss": self.log_loss,
        }


@dataclass(frozen=True)
class TrainRun:
    id: str
    trained: TrainedModel
    seed: int
    test_fraction: float
    test_indices: tuple[int, ...]
    evaluation: Evaluation


def evaluate_probs(y_true, probs) -> Evaluation:
    y_true = tuple(int(v) for v in y_true)
    probs = tuple(float(p) for p in probs)
    _, auc = roc_auc(y_true, probs)
    return Evaluation(y_true=y_true, probs=probs, auc=auc, log_loss=log_loss(y_true, probs))


def train_one(
    dataset: Dataset,
    kind: str,
    seed: int,
    test_fraction: float,
    config: TrainConfig | None = None,
) -> TrainRun:
    config = config or TrainConfig()
    clean = drop_missing(dataset)
    X, y = split_xy(clean)
    split = train_test_split(X, y, test_fraction, seed)
    return _train_on_split(X, y, split.train_indices, split.test_indices, kind, seed,
                           test_fraction, config)


def _train_on_split(
    X: FeatureMatrix,
    y: LabelVector,
    train_idx,
    test_idx,
    kind: str,
    seed: int,
    test_fraction: float,
    config: TrainConfig,
) -> TrainRun:
    train_idx = list(train_idx)
    test_idx = list(test_idx)
    X_train = FeatureMatrix(values=X.values[train_idx], feature_names=X.feature_names)
    X_test = FeatureMatrix(values=X.values[test_idx], feature_names=X.feature_names)
    y_train = y.labels[train_idx]
    y_test = y.labels[test_idx]

    scaler = standardize_fit(X_train)
    Xs_train = standardize_apply(scaler, X_train)
    Xs_test = standardize_apply(scaler, X_test)

    model = fit_model(kind, Xs_train.values, y_train, config)
    trained = build_trained_model(kind, model, scaler, X.feature_names, config)
    probs = model.probabilities(Xs_test.values)
    return TrainRun(
        id=model_id(kind, seed, model),
        trained=trained,
        seed=seed,
        test_fraction=test_fraction,
        test_indices=tuple(test_idx),
        evaluation=evaluate_probs(y_test, probs),
    )


def compare_models(
    dataset: Dataset,
    seed: int,
    test_fraction: float,
    config: TrainConfig | None = None,
    min_rows: int = 10,
) -> dict:
    """Train all five kinds on one shared split; table rows in fixed order."""
    config = config or TrainConfig()
    clean = drop_missing(dataset)
    if clean.row_count < min_rows:
        raise EmptyResultError(
            f"cleaned dataset has {clean.row_count} rows; need at least {min_rows}"
        )
    X, y = split_xy(clean)
    split = train_test_split(X, y, test_fraction, seed)

    rows = []
    runs = {}
    for kind in MODEL_KINDS:
        run = _train_on_split(
            X, y, split.train_indices, split.test_indices, kind, seed, test_fraction, config
        )
        runs[kind] = run
        at_default = run.evaluation.metrics_at(config.threshold)
        rows.append(
            {
                "model": kind,
                "accuracy": at_default["report"]["accuracy"],
                "log_loss": run.evaluation.log_loss,
                "auc": run.evaluation.auc,
            }
        )
    best_accuracy = max(r["accuracy"] for r in rows)
    best = [r["model"] for r in rows if r["accuracy"] == best_accuracy]
    return {
        "seed": seed,
        "test_fraction": test_fraction,
        "n_rows": clean.row_count,
        "n_train": len(split.train_indices),
        "n_test": len(split.test_indices),
        "rows": rows,
        "best": best,
        "_runs": runs,  # stripped before serialization
    }


def analytics_report(dataset: Dataset) -> dict:
    """Correlations, group means, histograms, and outliers of the cleaned data."""
    clean = drop_missing(dataset)
    t = clean.target_index

    all_names = clean.column_names
    values = np.array(
        [[row[j] for j in range(len(all_names))] for row in clean.rows], dtype=np.float64
    )
    corr = pearson_matrix(FeatureMatrix(values=values, feature_names=all_names))

    feature_names = [n for j, n in enumerate(all_names) if j != t]
    histograms = {}
    outliers = {}
    for name in feature_names:
        column = clean.column(name)
        histograms[name] = histogram(column).to_dict()
        outliers[name] = iqr_outliers(column) if len(column) >= 4 else []

    groups = group_means(clean).to_dict() if t is not None else None
    return {
        "correlations": corr.to_dict(),
        "groups": groups,
        "histograms": histograms,
        "outliers": outliers,
    }


def column_summary(dataset: Dataset) -> dict:
    """Shape, per-column non-null counts and basic stats of the raw dataset."""
    columns = []
    for col in dataset.schema:
        cells = [c for c in dataset.column(col.name) if c is not MISSING]
        stats = {
            "name": col.name,
            "role": col.role,
            "non_null": len(cells),
            "missing": dataset.row_count - len(cells),
        }
        if cells:
            mean = sum(cells) / len(cells)
            var = sum((c - mean) ** 2 for c in cells) / len(cells)
            stats.update(
                {"mean": mean, "std": math.sqrt(var), "min": min(cells), "max": max(cells)}
            )
        else:
            stats.update({"mean": None, "std": None, "min": None, "max": None})
        columns.append(stats)
    return {"row_count": dataset.row_count, "columns": columns}


def forecast_column(
    dataset: Dataset,
    column: str,
    horizon: int,
    alpha: float = 0.5,
    beta: float = 0.3,
    confidence: float = 0.95,
) -> dict:
    """Holt forecast over the column's complete observations in row order."""
    series = [v for v in dataset.column(column) if v is not MISSING]
    result = holt_fit_forecast(series, horizon, alpha=alpha, beta=beta, confidence=confidence)
    doc = result.to_dict()
    doc["column"] = column
    doc["horizon"] = horizon
    doc["n_observations"] = len(series)
    return doc
