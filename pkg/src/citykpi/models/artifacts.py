"""Trained-model artifact: kind tag, parameters, scaler, JSON persistence."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Callable, Sequence

import numpy as np

from ..data import FeatureMatrix, canonical_json
from ..preprocess import Scaler, standardize_apply
from .ann import AnnModel, ann_fit
from .bayes import BernoulliNbModel, bnb_fit
from .config import TrainConfig
from .logistic import LogisticModel, logreg_fit
from .svm import SvmModel, svm_fit
from .tree import TreeNode, tree_fit

MODEL_KINDS = ("logreg", "svm", "tree", "bnb", "ann")

_FIT: dict[str, Callable] = {
    "logreg": logreg_fit,
    "svm": svm_fit,
    "tree": tree_fit,
    "bnb": bnb_fit,
    "ann": ann_fit,
}

_CLASSES = {
    "logreg": LogisticModel,
    "svm": SvmModel,
    "tree": TreeNode,
    "bnb": BernoulliNbModel,
    "ann": AnnModel,
}


def fit_model(kind: str, X: np.ndarray, y: np.ndarray, config: TrainConfig):
    if kind not in _FIT:
        raise ValueError(f"unknown model kind {kind!r}; expected one of {MODEL_KINDS}")
    return _FIT[kind](X, y, config)


def predict(model, X: np.ndarray, threshold: float) -> np.ndarray:
    """Class 1 iff the model's probability is >= threshold."""
    X = np.atleast_2d(np.asarray(X, dtype=np.float64))
    return (model.probabilities(X) >= threshold).astype(np.int64)


@dataclass(frozen=True, eq=False)
class TrainedModel:
    kind: str
    model: object  # the kind-specific parameter payload
    scaler: Scaler
    feature_names: tuple[str, ...]
    training_config: TrainConfig
    trained_at: str

    def probabilities(self, X_raw: FeatureMatrix) -> np.ndarray:
        """Scale raw features with the fitted scaler, then score."""
        return self.model.probabilities(standardize_apply(self.scaler, X_raw).values)

    def predict(self, X_raw: FeatureMatrix, threshold: float | None = None) -> np.ndarray:
        t = self.training_config.threshold if threshold is None else threshold
        return (self.probabilities(X_raw) >= t).astype(np.int64)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "parameters": self.model.to_params(),
            "scaler": self.scaler.to_dict(),
            "feature_names": list(self.feature_names),
            "training_config": self.training_config.to_dict(),
            "trained_at": self.trained_at,
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "TrainedModel":
        kind = doc["kind"]
        if kind not in _CLASSES:
            raise ValueError(f"unknown model kind {kind!r}")
        return cls(
            kind=kind,
            model=_CLASSES[kind].from_params(doc["parameters"]),
            scaler=Scaler.from_dict(doc["scaler"]),
            feature_names=tuple(doc["feature_names"]),
            training_config=TrainConfig.from_dict(doc["training_config"]),
            trained_at=doc["trained_at"],
        )


def build_trained_model(
    kind: str,
    model,
    scaler: Scaler,
    feature_names: Sequence[str],
    config: TrainConfig,
    trained_at: str | None = None,
) -> TrainedModel:
    if trained_at is None:
        trained_at = datetime.now(timezone.utc).isoformat(timespec="seconds")
    return TrainedModel(
        kind=kind,
        model=model,
        scaler=scaler,
        feature_names=tuple(feature_names),
        training_config=config,
        trained_at=trained_at,
    )


def model_id(kind: str, seed: int, model) -> str:
    digest = hashlib.sha256(canonical_json(model.to_params()).encode()).hexdigest()
    return f"{kind}-{seed}-{digest[:12]}"


def save_model(trained: TrainedModel, path: str | Path, extra: dict | None = None) -> None:
    doc = trained.to_dict()
    if extra:
        doc.update(extra)
    Path(path).write_text(canonical_json(doc))


def load_model(path: str | Path) -> TrainedModel:
    import json

    return TrainedModel.from_dict(json.loads(Path(path).read_text()))
