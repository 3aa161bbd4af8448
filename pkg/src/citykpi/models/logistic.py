"""Logistic regression trained by full-batch gradient descent."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import NonFiniteError, WidthMismatchError
from .config import TrainConfig


def sigmoid(z):
    """1 / (1 + e^-z) via the branch-free tanh form; stable for any finite z."""
    return 0.5 * (1.0 + np.tanh(0.5 * np.asarray(z, dtype=np.float64)))


def _softplus(z: np.ndarray) -> np.ndarray:
    # log(1 + e^z) without overflow
    return np.maximum(z, 0.0) + np.log1p(np.exp(-np.abs(z)))


@dataclass(frozen=True, eq=False)
class LogisticModel:
    beta0: float
    beta: np.ndarray

    def scores(self, X: np.ndarray) -> np.ndarray:
        """P(y=1 | x) for each row."""
        X = np.asarray(X, dtype=np.float64)
        if X.shape[1] != self.beta.shape[0]:
            raise WidthMismatchError(
                f"model has {self.beta.shape[0]} features, input has {X.shape[1]}"
            )
        return sigmoid(X @ self.beta + self.beta0)

    probabilities = scores

    def to_params(self) -> dict:
        return {"beta0": float(self.beta0), "beta": [float(b) for b in self.beta]}

    @classmethod
    def from_params(cls, doc: dict) -> "LogisticModel":
        return cls(beta0=float(doc["beta0"]), beta=np.array(doc["beta"], dtype=np.float64))


def loss_and_gradient(
    beta0: float, beta: np.ndarray, X: np.ndarray, y: np.ndarray
) -> tuple[float, float, np.ndarray]:
    """Mean negative log-likelihood and its gradient.

    Returns (loss, d/dbeta0, d/dbeta). The loss uses the softplus identity
    -[y log p + (1-y) log(1-p)] = softplus(z) - y*z so large |z| cannot
    overflow.
    """
    n = X.shape[0]
    z = X @ beta + beta0
    loss = float(np.mean(_softplus(z) - y * z))
    residual = sigmoid(z) - y
    return loss, float(np.mean(residual)), X.T @ residual / n


def logreg_fit(X: np.ndarray, y: np.ndarray, config: TrainConfig) -> LogisticModel:
    """Full-batch gradient descent on the mean NLL from beta = 0."""
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    beta0 = 0.0
    beta = np.zeros(X.shape[1])
    lr = config.logreg_learning_rate
    with np.errstate(over="ignore", invalid="ignore"):  # divergence raises below
        for _ in range(config.logreg_iterations):
            loss, g0, g = loss_and_gradient(beta0, beta, X, y)
            if not np.isfinite(loss):
                raise NonFiniteError("logistic loss diverged; lower the learning rate")
            beta0 -= lr * g0
            beta = beta - lr * g
    if not (np.isfinite(beta0) and np.all(np.isfinite(beta))):
        raise NonFiniteError("logistic parameters diverged; lower the learning rate")
    return LogisticModel(beta0=beta0, beta=beta)
