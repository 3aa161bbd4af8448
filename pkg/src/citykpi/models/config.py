"""Hyperparameter containers for the five classifiers."""

from __future__ import annotations

from dataclasses import dataclass, field, replace


@dataclass(frozen=True)
class AdamConfig:
    learning_rate: float = 0.001
    beta1: float = 0.9
    beta2: float = 0.999
    epsilon: float = 1e-8
    epochs: int = 500
    init_seed: int = 0

    def __post_init__(self):
        if self.learning_rate <= 0:
            raise ValueError("learning_rate must be positive")
        if not (0 < self.beta1 < 1 and 0 < self.beta2 < 1):
            raise ValueError("beta1 and beta2 must be in (0,1)")
        if self.epsilon <= 0:
            raise ValueError("epsilon must be positive")
        if self.epochs < 1:
            raise ValueError("epochs must be >= 1")

    def to_dict(self) -> dict:
        return {
            "learning_rate": self.learning_rate,
            "beta1": self.beta1,
            "beta2": self.beta2,
            "epsilon": self.epsilon,
            "epochs": self.epochs,
            "init_seed": self.init_seed,
        }


@dataclass(frozen=True)
class TrainConfig:
    threshold: float = 0.5
    logreg_learning_rate: float = 0.1
    logreg_iterations: int = 1000
    svm_c: float = 1.0
    svm_epochs: int = 200
    tree_max_depth: int | None = None
    tree_min_samples_split: int = 2
    bnb_alpha: float = 1.0
    bnb_binarize_threshold: float = 0.0
    ann_hidden: int = 8
    adam: AdamConfig = field(default_factory=AdamConfig)

    def __post_init__(self):
        if not (0.0 <= self.threshold <= 1.0):
            raise ValueError("threshold must be in [0,1]")
        positive = {
            "logreg_learning_rate": self.logreg_learning_rate,
            "logreg_iterations": self.logreg_iterations,
            "svm_c": self.svm_c,
            "svm_epochs": self.svm_epochs,
            "tree_min_samples_split": self.tree_min_samples_split,
            "bnb_alpha": self.bnb_alpha,
            "ann_hidden": self.ann_hidden,
        }
        for name, value in positive.items():
            if value <= 0:
                raise ValueError(f"{name} must be positive")
        if self.tree_max_depth is not None and self.tree_max_depth < 1:
            raise ValueError("tree_max_depth must be >= 1 or None")

    def to_dict(self) -> dict:
        return {
            "threshold": self.threshold,
            "logreg_learning_rate": self.logreg_learning_rate,
            "logreg_iterations": self.logreg_iterations,
            "svm_c": self.svm_c,
            "svm_epochs": self.svm_epochs,
            "tree_max_depth": self.tree_max_depth,
            "tree_min_samples_split": self.tree_min_samples_split,
            "bnb_alpha": self.bnb_alpha,
            "bnb_binarize_threshold": self.bnb_binarize_threshold,
            "ann_hidden": self.ann_hidden,
            "adam": self.adam.to_dict(),
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "TrainConfig":
        doc = dict(doc)
        adam_doc = doc.pop("adam", None)
        known = {f for f in cls.__dataclass_fields__ if f != "adam"}
        unknown = set(doc) - known
        if unknown:
            raise ValueError(f"unknown hyperparameters: {sorted(unknown)}")
        config = cls(**doc)
        if adam_doc is not None:
            config = replace(config, adam=AdamConfig(**adam_doc))
        return config
