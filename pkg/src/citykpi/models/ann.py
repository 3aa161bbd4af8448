"""One-hidden-layer network (ReLU -> sigmoid) trained with full-batch Adam.

Weights start uniform in +/- sqrt(6 / (fan_in + fan_out)) drawn from a
single splitmix64 stream (W1 row-major, then the output weights), biases
zero, so initialization is bit-identical for a given init_seed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import NonFiniteError, WidthMismatchError
from ..rng import SplitMix64
from .config import AdamConfig, TrainConfig
from .logistic import _softplus, sigmoid


@dataclass(frozen=True, eq=False)
class AnnModel:
    W1: np.ndarray  # (hidden, p)
    b1: np.ndarray  # (hidden,)
    w2: np.ndarray  # (hidden,)
    b2: float

    def scores(self, X: np.ndarray) -> np.ndarray:
        X = np.asarray(X, dtype=np.float64)
        if X.shape[1] != self.W1.shape[1]:
            raise WidthMismatchError(
                f"model has {self.W1.shape[1]} features, input has {X.shape[1]}"
            )
        hidden = np.maximum(X @ self.W1.T + self.b1, 0.0)
        return sigmoid(hidden @ self.w2 + self.b2)

    probabilities = scores

    def to_params(self) -> dict:
        return {
            "W1": [[float(v) for v in row] for row in self.W1],
            "b1": [float(v) for v in self.b1],
            "w2": [float(v) for v in self.w2],
            "b2": float(self.b2),
        }

    @classmethod
    def from_params(cls, doc: dict) -> "AnnModel":
        return cls(
            W1=np.array(doc["W1"], dtype=np.float64),
            b1=np.array(doc["b1"], dtype=np.float64),
            w2=np.array(doc["w2"], dtype=np.float64),
            b2=float(doc["b2"]),
        )


def init_weights(p: int, hidden: int, seed: int) -> tuple[np.ndarray, np.ndarray]:
    rng = SplitMix64(seed)
    lim1 = np.sqrt(6.0 / (p + hidden))
    W1 = np.array(
        [[rng.next_uniform(-lim1, lim1) for _ in range(p)] for _ in range(hidden)]
    )
    lim2 = np.sqrt(6.0 / (hidden + 1))
    w2 = np.array([rng.next_uniform(-lim2, lim2) for _ in range(hidden)])
    return W1, w2


def loss_and_gradients(
    W1: np.ndarray, b1: np.ndarray, w2: np.ndarray, b2: float,
    X: np.ndarray, y: np.ndarray,
) -> tuple[float, tuple[np.ndarray, np.ndarray, np.ndarray, float]]:
    """Mean binary cross-entropy and its gradient w.r.t. every parameter.

    ReLU uses derivative 0 at exactly 0.
    """
    n = X.shape[0]
    Z1 = X @ W1.T + b1
    A1 = np.maximum(Z1, 0.0)
    z2 = A1 @ w2 + b2
    loss = float(np.mean(_softplus(z2) - y * z2))

    d2 = (sigmoid(z2) - y) / n  # (n,)
    g_w2 = A1.T @ d2
    g_b2 = float(d2.sum())
    dZ1 = np.outer(d2, w2) * (Z1 > 0.0)
    g_W1 = dZ1.T @ X
    g_b1 = dZ1.sum(axis=0)
    return loss, (g_W1, g_b1, g_w2, g_b2)


def ann_fit(X: np.ndarray, y: np.ndarray, config: TrainConfig) -> AnnModel:
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    adam: AdamConfig = config.adam
    hidden = config.ann_hidden

    W1, w2 = init_weights(X.shape[1], hidden, adam.init_seed)
    b1 = np.zeros(hidden)
    b2 = 0.0

    params = [W1, b1, w2, np.array(b2)]
    m = [np.zeros_like(p) for p in params]
    v = [np.zeros_like(p) for p in params]
    a, b1c, b2c, eps = adam.learning_rate, adam.beta1, adam.beta2, adam.epsilon

    with np.errstate(over="ignore", invalid="ignore"):  # divergence raises below
        for t in range(1, adam.epochs + 1):
            loss, grads = loss_and_gradients(
                params[0], params[1], params[2], float(params[3]), X, y
            )
            if not np.isfinite(loss):
                raise NonFiniteError("ANN loss diverged")
            for k, g in enumerate(grads):
                g = np.asarray(g, dtype=np.float64)
                m[k] = b1c * m[k] + (1.0 - b1c) * g
                v[k] = b2c * v[k] + (1.0 - b2c) * g * g
                m_hat = m[k] / (1.0 - b1c**t)
                v_hat = v[k] / (1.0 - b2c**t)
                params[k] = params[k] - a * m_hat / (np.sqrt(v_hat) + eps)

    W1, b1, w2, b2 = params
    if not all(np.all(np.isfinite(p)) for p in params):
        raise NonFiniteError("ANN parameters diverged")
    return AnnModel(W1=W1, b1=b1, w2=w2, b2=float(b2))


def adam_step(
    theta: np.ndarray, grad: np.ndarray, m: np.ndarray, v: np.ndarray,
    t: int, config: AdamConfig,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """One bias-corrected Adam update; exposed for direct verification."""
    m = config.beta1 * m + (1.0 - config.beta1) * grad
    v = config.beta2 * v + (1.0 - config.beta2) * grad * grad
    m_hat = m / (1.0 - config.beta1**t)
    v_hat = v / (1.0 - config.beta2**t)
    return theta - config.learning_rate * m_hat / (np.sqrt(v_hat) + config.epsilon), m, v
