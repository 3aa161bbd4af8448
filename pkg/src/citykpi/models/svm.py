"""Soft-margin linear SVM trained by deterministic subgradient descent.

Objective: (1/2)||w||^2 + c * sum_i max(0, 1 - y_i (w.x_i + b)) with labels
remapped to {-1,+1}. Training runs the Pegasos schedule on the equivalent
lambda-scaled objective (lambda = 1/(c*n)) with step 1/(lambda*t), visiting
samples in index order so two runs are bit-identical. The returned weights
are the average of the per-step iterates, which makes the epoch-to-epoch
objective trace well behaved.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import NonFiniteError, WidthMismatchError
from .config import TrainConfig
from .logistic import sigmoid


@dataclass(frozen=True, eq=False)
class SvmModel:
    w: np.ndarray
    b: float
    c: float

    def scores(self, X: np.ndarray) -> np.ndarray:
        """Raw margin w.x + b; sign decides the class, >= 0 maps to class 1."""
        X = np.asarray(X, dtype=np.float64)
        if X.shape[1] != self.w.shape[0]:
            raise WidthMismatchError(
                f"model has {self.w.shape[0]} features, input has {X.shape[1]}"
            )
        return X @ self.w + self.b

    def probabilities(self, X: np.ndarray) -> np.ndarray:
        """Probability surrogate sigma(margin) used for thresholding."""
        return sigmoid(self.scores(X))

    def to_params(self) -> dict:
        return {"w": [float(v) for v in self.w], "b": float(self.b), "c": float(self.c)}

    @classmethod
    def from_params(cls, doc: dict) -> "SvmModel":
        return cls(w=np.array(doc["w"], dtype=np.float64), b=float(doc["b"]), c=float(doc["c"]))


def svm_score(model: SvmModel, x: np.ndarray) -> float:
    x = np.asarray(x, dtype=np.float64)
    if x.shape[-1] != model.w.shape[0]:
        raise WidthMismatchError(
            f"model has {model.w.shape[0]} features, input has {x.shape[-1]}"
        )
    return float(x @ model.w + model.b)


def svm_objective(model: SvmModel, X: np.ndarray, y: np.ndarray) -> dict:
    """Decomposed objective: total = reg + c * hinge, hinge = sum of losses."""
    y_pm = 2.0 * np.asarray(y, dtype=np.float64) - 1.0
    margins = y_pm * model.scores(X)
    hinge = float(np.sum(np.maximum(0.0, 1.0 - margins)))
    reg = 0.5 * float(model.w @ model.w)
    return {"reg": reg, "hinge": hinge, "total": reg + model.c * hinge}


def svm_fit(X: np.ndarray, y: np.ndarray, config: TrainConfig) -> SvmModel:
    X = np.asarray(X, dtype=np.float64)
    y_pm = 2.0 * np.asarray(y, dtype=np.float64) - 1.0
    n, p = X.shape
    c = config.svm_c
    lam = 1.0 / (c * n)

    w = np.zeros(p)
    b = 0.0
    w_sum = np.zeros(p)
    b_sum = 0.0
    t = 0
    for _ in range(config.svm_epochs):
        for i in range(n):
            t += 1
            eta = 1.0 / (lam * t)
            if y_pm[i] * (X[i] @ w + b) < 1.0:
                w = (1.0 - 1.0 / t) * w + eta * y_pm[i] * X[i]
                b = b + eta * y_pm[i]
            else:
                w = (1.0 - 1.0 / t) * w
            w_sum += w
            b_sum += b
        if not (np.all(np.isfinite(w)) and np.isfinite(b)):
            raise NonFiniteError("SVM weights diverged")
    return SvmModel(w=w_sum / t, b=b_sum / t, c=c)
