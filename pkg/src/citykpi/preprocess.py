"""Cleansing and transforming: row dropping, X/y split, shuffling, scaling.

The train/test shuffle is Fisher-Yates driven by splitmix64, so a fixed
(n, test_fraction, seed) triple gives the same split on every platform.
Standardization is fitted on the training rows only and applied as a pure
function, so test-set statistics can never leak in.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .data import MISSING, Dataset, FeatureMatrix, LabelVector, Split
from .errors import (
    BadFractionError,
    EmptyResultError,
    MissingTargetError,
    WidthMismatchError,
)
from .rng import fisher_yates


@dataclass(frozen=True)
class Scaler:
    means: tuple[float, ...]
    stds: tuple[float, ...]

    def to_dict(self) -> dict:
        return {"means": list(self.means), "stds": list(self.stds)}

    @classmethod
    def from_dict(cls, doc: dict) -> "Scaler":
        return cls(means=tuple(doc["means"]), stds=tuple(doc["stds"]))


def drop_missing(dataset: Dataset) -> Dataset:
    """Keep exactly the rows with zero MISSING cells, in original order."""
    kept = tuple(row for row in dataset.rows if all(c is not MISSING for c in row))
    if not kept:
        raise EmptyResultError("no complete rows remain after dropping missing values")
    return Dataset(schema=dataset.schema, rows=kept)


def split_xy(dataset: Dataset) -> tuple[FeatureMatrix, LabelVector]:
    """Separate feature columns (schema order) from the target column."""
    t = dataset.target_index
    if t is None:
        raise MissingTargetError("dataset has no target column")
    feature_names = tuple(
        c.name for j, c in enumerate(dataset.schema) if j != t
    )
    x_rows = []
    y = []
    for row in dataset.rows:
        x_rows.append([row[j] for j in range(len(dataset.schema)) if j != t])
        y.append(row[t])
    return (
        FeatureMatrix(values=np.array(x_rows, dtype=np.float64), feature_names=feature_names),
        LabelVector(labels=np.array(y)),
    )


def train_test_split(
    X: FeatureMatrix, y: LabelVector, test_fraction: float, seed: int
) -> Split:
    """Deterministic shuffled split; |test| = ceil(test_fraction * n)."""
    if not (0.0 < test_fraction < 1.0):
        raise BadFractionError(f"test_fraction must be in (0,1), got {test_fraction}")
    n = X.n
    if len(y) != n:
        raise WidthMismatchError("X and y disagree on n")
    order = fisher_yates(n, seed)
    n_test = math.ceil(test_fraction * n)
    return Split(
        train_indices=tuple(order[n_test:]),
        test_indices=tuple(order[:n_test]),
        seed=seed,
        test_fraction=test_fraction,
    )


def standardize_fit(X_train: FeatureMatrix) -> Scaler:
    """Column means and population standard deviations (divide by n)."""
    means = X_train.values.mean(axis=0)
    stds = X_train.values.std(axis=0)  # numpy default ddof=0 is the population std
    return Scaler(means=tuple(float(m) for m in means), stds=tuple(float(s) for s in stds))


def standardize_apply(scaler: Scaler, X: FeatureMatrix) -> FeatureMatrix:
    """(x - mean) / std per column; zero-variance columns map to 0."""
    if len(scaler.means) != X.p:
        raise WidthMismatchError(
            f"scaler width {len(scaler.means)} != matrix width {X.p}"
        )
    means = np.array(scaler.means)
    stds = np.array(scaler.stds)
    safe = np.where(stds == 0.0, 1.0, stds)
    out = (X.values - means) / safe
    out[:, stds == 0.0] = 0.0
    return FeatureMatrix(values=out, feature_names=X.feature_names)
