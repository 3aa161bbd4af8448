"""Bernoulli naive Bayes over binarized standardized features.

Features are binarized as x > threshold (default 0.0, i.e. above the
training mean after standardization). Conditional probabilities use
Laplace smoothing: theta = (count + alpha) / (n_class + 2*alpha).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import SingleClassError, WidthMismatchError
from .config import TrainConfig


@dataclass(frozen=True, eq=False)
class BernoulliNbModel:
    log_prior: np.ndarray  # shape (2,)
    log_theta: np.ndarray  # shape (2, p)
    log_one_minus_theta: np.ndarray  # shape (2, p)
    binarize_threshold: float

    def _joint_log_likelihood(self, X: np.ndarray) -> np.ndarray:
        X = np.asarray(X, dtype=np.float64)
        if X.shape[1] != self.log_theta.shape[1]:
            raise WidthMismatchError(
                f"model has {self.log_theta.shape[1]} features, input has {X.shape[1]}"
            )
        B = (X > self.binarize_threshold).astype(np.float64)
        return self.log_prior + B @ self.log_theta.T + (1.0 - B) @ self.log_one_minus_theta.T

    def posteriors(self, X: np.ndarray) -> np.ndarray:
        """Normalized P(class | x), shape (n, 2); rows sum to 1."""
        joint = self._joint_log_likelihood(X)
        joint -= joint.max(axis=1, keepdims=True)
        exp = np.exp(joint)
        return exp / exp.sum(axis=1, keepdims=True)

    def scores(self, X: np.ndarray) -> np.ndarray:
        return self.posteriors(X)[:, 1]

    probabilities = scores

    def to_params(self) -> dict:
        return {
            "log_prior": [float(v) for v in self.log_prior],
            "log_theta": [[float(v) for v in row] for row in self.log_theta],
            "log_one_minus_theta": [
                [float(v) for v in row] for row in self.log_one_minus_theta
            ],
            "binarize_threshold": float(self.binarize_threshold),
        }

    @classmethod
    def from_params(cls, doc: dict) -> "BernoulliNbModel":
        return cls(
            log_prior=np.array(doc["log_prior"], dtype=np.float64),
            log_theta=np.array(doc["log_theta"], dtype=np.float64),
            log_one_minus_theta=np.array(doc["log_one_minus_theta"], dtype=np.float64),
            binarize_threshold=float(doc["binarize_threshold"]),
        )


def bnb_fit(X: np.ndarray, y: np.ndarray, config: TrainConfig) -> BernoulliNbModel:
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.int64)
    if len(np.unique(y)) < 2:
        raise SingleClassError("naive Bayes needs both classes in the training labels")
    alpha = config.bnb_alpha
    B = (X > config.bnb_binarize_threshold).astype(np.float64)
    n = y.shape[0]
    theta = np.empty((2, X.shape[1]))
    prior = np.empty(2)
    for cls_ in (0, 1):
        rows = B[y == cls_]
        n_c = rows.shape[0]
        theta[cls_] = (rows.sum(axis=0) + alpha) / (n_c + 2.0 * alpha)
        prior[cls_] = n_c / n
    return BernoulliNbModel(
        log_prior=np.log(prior),
        log_theta=np.log(theta),
        log_one_minus_theta=np.log(1.0 - theta),
        binarize_threshold=config.bnb_binarize_threshold,
    )
