from .ann import AnnModel, adam_step, ann_fit, init_weights, loss_and_gradients
from .artifacts import (
    MODEL_KINDS,
    TrainedModel,
    build_trained_model,
    fit_model,
    load_model,
    model_id,
    predict,
    save_model,
)
from .bayes import BernoulliNbModel, bnb_fit
from .config import AdamConfig, TrainConfig
from .logistic import LogisticModel, logreg_fit, loss_and_gradient, sigmoid
from .svm import SvmModel, svm_fit, svm_objective, svm_score
from .tree import TreeNode, gini, tree_fit

__all__ = [
    "AdamConfig",
    "AnnModel",
    "BernoulliNbModel",
    "LogisticModel",
    "MODEL_KINDS",
    "SvmModel",
    "TrainConfig",
    "TrainedModel",
    "TreeNode",
    "adam_step",
    "ann_fit",
    "bnb_fit",
    "build_trained_model",
    "fit_model",
    "gini",
    "init_weights",
    "load_model",
    "logreg_fit",
    "loss_and_gradient",
    "loss_and_gradients",
    "model_id",
    "predict",
    "save_model",
    "sigmoid",
    "svm_fit",
    "svm_objective",
    "svm_score",
    "tree_fit",
]
