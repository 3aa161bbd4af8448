"""Binary decision tree grown by exhaustive Gini-impurity search.

Candidate thresholds are midpoints between consecutive sorted distinct
feature values; ties between candidate splits break toward the lowest
impurity, then lowest feature index, then lowest threshold, so the grown
tree is a deterministic function of the data.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import WidthMismatchError
from .config import TrainConfig


@dataclass(frozen=True)
class TreeNode:
    # Leaf: label + class_counts set, children absent.
    # Internal: feature_index/threshold/left/right set.
    label: int | None = None
    class_counts: tuple[int, int] | None = None
    feature_index: int | None = None
    threshold: float | None = None
    left: "TreeNode | None" = None
    right: "TreeNode | None" = None

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    def to_params(self) -> dict:
        if self.is_leaf:
            return {
                "leaf": True,
                "label": self.label,
                "class_counts": list(self.class_counts),
            }
        return {
            "leaf": False,
            "feature_index": self.feature_index,
            "threshold": self.threshold,
            "left": self.left.to_params(),
            "right": self.right.to_params(),
        }

    @classmethod
    def from_params(cls, doc: dict) -> "TreeNode":
        if doc["leaf"]:
            return cls(label=doc["label"], class_counts=tuple(doc["class_counts"]))
        return cls(
            feature_index=doc["feature_index"],
            threshold=doc["threshold"],
            left=cls.from_params(doc["left"]),
            right=cls.from_params(doc["right"]),
        )

    def _leaf_for(self, x: np.ndarray) -> "TreeNode":
        node = self
        while not node.is_leaf:
            node = node.left if x[node.feature_index] <= node.threshold else node.right
        return node

    def scores(self, X: np.ndarray) -> np.ndarray:
        """Class-1 fraction of the training subset at each row's leaf."""
        X = np.asarray(X, dtype=np.float64)
        if not self.is_leaf and X.shape[1] <= self._max_feature_index():
            raise WidthMismatchError("input has fewer features than the tree uses")
        out = np.empty(X.shape[0])
        for i, x in enumerate(X):
            n0, n1 = self._leaf_for(x).class_counts
            out[i] = n1 / (n0 + n1)
        return out

    probabilities = scores

    def _max_feature_index(self) -> int:
        if self.is_leaf:
            return -1
        return max(
            self.feature_index,
            self.left._max_feature_index(),
            self.right._max_feature_index(),
        )


def gini(labels: np.ndarray) -> float:
    """1 - sum of squared class proportions."""
    n = labels.shape[0]
    if n == 0:
        return 0.0
    p1 = float(np.sum(labels)) / n
    return 1.0 - (p1 * p1 + (1.0 - p1) * (1.0 - p1))


def _majority(labels: np.ndarray) -> tuple[int, tuple[int, int]]:
    n1 = int(np.sum(labels))
    n0 = labels.shape[0] - n1
    return (1 if n1 > n0 else 0), (n0, n1)  # tie -> class 0


def _best_split(X: np.ndarray, y: np.ndarray) -> tuple[float, int, float] | None:
    """(weighted impurity, feature index, threshold) of the best candidate."""
    n = X.shape[0]
    best: tuple[float, int, float] | None = None
    for j in range(X.shape[1]):
        distinct = np.unique(X[:, j])
        for lo, hi in zip(distinct, distinct[1:]):
            thr = (lo + hi) / 2.0
            mask = X[:, j] <= thr
            n_left = int(mask.sum())
            impurity = (
                n_left * gini(y[mask]) + (n - n_left) * gini(y[~mask])
            ) / n
            candidate = (impurity, j, thr)
            if best is None or candidate < best:
                best = candidate
    return best


def _grow(X: np.ndarray, y: np.ndarray, depth: int, config: TrainConfig) -> TreeNode:
    label, counts = _majority(y)
    pure = counts[0] == 0 or counts[1] == 0
    at_depth = config.tree_max_depth is not None and depth >= config.tree_max_depth
    too_small = y.shape[0] < config.tree_min_samples_split
    if pure or at_depth or too_small:
        return TreeNode(label=label, class_counts=counts)
    best = _best_split(X, y)
    if best is None:  # every feature constant
        return TreeNode(label=label, class_counts=counts)
    _, j, thr = best
    mask = X[:, j] <= thr
    return TreeNode(
        feature_index=j,
        threshold=thr,
        left=_grow(X[mask], y[mask], depth + 1, config),
        right=_grow(X[~mask], y[~mask], depth + 1, config),
    )


def tree_fit(X: np.ndarray, y: np.ndarray, config: TrainConfig) -> TreeNode:
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.int64)
    return _grow(X, y, 0, config)
