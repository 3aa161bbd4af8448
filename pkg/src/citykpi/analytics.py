"""Exploratory analysis: correlations, group averages, histograms, outlier
screening, and Holt linear-trend forecasting with prediction bounds."""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from statistics import NormalDist

import numpy as np

from .data import MISSING, Dataset, FeatureMatrix
from .errors import (
    MissingTargetError,
    SeriesTooShortError,
    TooFewRowsError,
    TooFewValuesError,
)


@dataclass(frozen=True, eq=False)
class CorrelationMatrix:
    names: tuple[str, ...]
    values: np.ndarray  # p x p, symmetric, unit diagonal
    constant_columns: tuple[str, ...]  # flagged: correlations set to 0 by convention

    def to_dict(self) -> dict:
        return {
            "names": list(self.names),
            "values": [[float(v) for v in row] for row in self.values],
            "constant_columns": list(self.constant_columns),
        }


@dataclass(frozen=True)
class GroupSummary:
    # group value (0 or 1) -> {"count": n, "means": {feature: mean}}
    groups: dict[int, dict]
    empty_groups: tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "groups": {str(k): v for k, v in self.groups.items()},
            "empty_groups": list(self.empty_groups),
        }


@dataclass(frozen=True)
class Histogram:
    bin_edges: tuple[float, ...]
    counts: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"bin_edges": list(self.bin_edges), "counts": list(self.counts)}


@dataclass(frozen=True)
class HoltState:
    alpha: float
    beta: float
    level: float
    trend: float
    residuals: tuple[float, ...]


@dataclass(frozen=True)
class ForecastStep:
    point: float
    lower: float
    upper: float
    margin: float  # z * s * sqrt(h); scales exactly as sqrt(h)

    def to_dict(self) -> dict:
        return {
            "point": self.point,
            "lower": self.lower,
            "upper": self.upper,
            "margin": self.margin,
        }


@dataclass(frozen=True)
class ForecastResult:
    steps: tuple[ForecastStep, ...]
    confidence: float
    state: HoltState

    def to_dict(self) -> dict:
        return {
            "steps": [s.to_dict() for s in self.steps],
            "confidence": self.confidence,
            "level": self.state.level,
            "trend": self.state.trend,
        }


def pearson_matrix(X: FeatureMatrix) -> CorrelationMatrix:
    """Pairwise Pearson r with population moments; constant columns -> 0."""
    if X.n < 2:
        raise TooFewRowsError("correlation needs at least 2 rows")
    values = X.values
    p = X.p
    means = values.mean(axis=0)
    centered = values - means
    stds = values.std(axis=0)
    constant = stds == 0.0

    out = np.eye(p)
    for j in range(p):
        for k in range(j + 1, p):
            if constant[j] or constant[k]:
                r = 0.0
            else:
                cov = float(np.mean(centered[:, j] * centered[:, k]))
                r = cov / (stds[j] * stds[k])
                r = max(-1.0, min(1.0, r))  # clamp rounding spill
            out[j, k] = out[k, j] = r
    return CorrelationMatrix(
        names=X.feature_names,
        values=out,
        constant_columns=tuple(n for n, c in zip(X.feature_names, constant) if c),
    )


def group_means(dataset: Dataset, target: str | None = None) -> GroupSummary:
    """Per-feature arithmetic mean within each target value."""
    if target is None:
        t = dataset.target_index
        if t is None:
            raise MissingTargetError("dataset has no target column")
    else:
        try:
            t = dataset.column_names.index(target)
        except ValueError:
            raise KeyError(target) from None
    feature_cols = [(j, c.name) for j, c in enumerate(dataset.schema) if j != t]

    groups: dict[int, dict] = {}
    empty: list[int] = []
    for value in (0, 1):
        rows = [r for r in dataset.rows if r[t] == value]
        if not rows:
            empty.append(value)
            groups[value] = {"count": 0, "means": {name: None for _, name in feature_cols}}
            continue
        means = {
            name: sum(r[j] for r in rows) / len(rows) for j, name in feature_cols
        }
        groups[value] = {"count": len(rows), "means": means}
    return GroupSummary(groups=groups, empty_groups=tuple(empty))


def sturges_bins(n: int) -> int:
    return int(math.ceil(math.log2(n))) + 1 if n > 1 else 1


def histogram(values, bin_count: int | None = None) -> Histogram:
    """Equal-width bins over [min, max]; bins are [lo, hi) except the last."""
    vals = [float(v) for v in values if v is not MISSING]
    if not vals:
        raise TooFewValuesError("histogram needs at least one finite value")
    if bin_count is None:
        bin_count = sturges_bins(len(vals))
    if bin_count < 1:
        raise ValueError("bin_count must be >= 1")
    lo, hi = min(vals), max(vals)
    if lo == hi:
        # All-equal input collapses to one bin around the shared value.
        return Histogram(bin_edges=(lo - 0.5, hi + 0.5), counts=(len(vals),))
    edges = [lo + (hi - lo) * i / bin_count for i in range(bin_count + 1)]
    edges[-1] = hi
    counts = [0] * bin_count
    for v in vals:
        k = bisect.bisect_right(edges, v) - 1
        if k >= bin_count:  # v == hi lands in the final closed bin
            k = bin_count - 1
        counts[k] += 1
    return Histogram(bin_edges=tuple(edges), counts=tuple(counts))


def quartiles(values) -> tuple[float, float]:
    """Q1 and Q3 by linear interpolation at position (n-1)*q over sorted data."""
    ordered = sorted(float(v) for v in values)
    n = len(ordered)

    def at(q: float) -> float:
        pos = (n - 1) * q
        lo = int(math.floor(pos))
        hi = int(math.ceil(pos))
        if lo == hi:
            return ordered[lo]
        frac = pos - lo
        return ordered[lo] * (1.0 - frac) + ordered[hi] * frac

    return at(0.25), at(0.75)


def iqr_outliers(values) -> list[int]:
    """Indices of values outside [Q1 - 1.5*IQR, Q3 + 1.5*IQR]."""
    vals = [float(v) for v in values]
    if len(vals) < 4:
        raise TooFewValuesError("IQR screening needs at least 4 values")
    q1, q3 = quartiles(vals)
    iqr = q3 - q1
    lower = q1 - 1.5 * iqr
    upper = q3 + 1.5 * iqr
    return [i for i, v in enumerate(vals) if v < lower or v > upper]


def holt_fit(series, alpha: float, beta: float) -> HoltState:
    """Holt double exponential smoothing: level y0, trend y1 - y0, then the
    standard recursions; residuals are one-step-ahead errors."""
    y = [float(v) for v in series]
    if len(y) < 3:
        raise SeriesTooShortError(f"need >= 3 observations, got {len(y)}")
    if not all(math.isfinite(v) for v in y):
        raise ValueError("series must be finite")
    if not (0.0 < alpha <= 1.0 and 0.0 < beta <= 1.0):
        raise ValueError("alpha and beta must be in (0, 1]")

    level = y[0]
    trend = y[1] - y[0]
    residuals = []
    for t in range(1, len(y)):
        predicted = level + trend
        residuals.append(y[t] - predicted)
        new_level = alpha * y[t] + (1.0 - alpha) * (level + trend)
        trend = beta * (new_level - level) + (1.0 - beta) * trend
        level = new_level
    return HoltState(
        alpha=alpha, beta=beta, level=level, trend=trend, residuals=tuple(residuals)
    )


def holt_fit_forecast(
    series,
    horizon: int,
    alpha: float = 0.5,
    beta: float = 0.3,
    confidence: float = 0.95,
) -> ForecastResult:
    """Forecast level + h*trend with +/- z*s*sqrt(h) prediction bounds.

    s is the population standard deviation of the one-step residuals and z
    the two-sided normal quantile for the confidence level.
    """
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    if not (0.0 < confidence < 1.0):
        raise ValueError("confidence must be in (0, 1)")
    state = holt_fit(series, alpha, beta)
    res = state.residuals
    mean_res = sum(res) / len(res)
    s = math.sqrt(sum((r - mean_res) ** 2 for r in res) / len(res))
    z = NormalDist().inv_cdf((1.0 + confidence) / 2.0)

    steps = []
    scale = z * s
    for h in range(1, horizon + 1):
        point = state.level + h * state.trend
        half = scale * math.sqrt(h)
        steps.append(
            ForecastStep(point=point, lower=point - half, upper=point + half, margin=half)
        )
    return ForecastResult(steps=tuple(steps), confidence=confidence, state=state)
