"""City KPI analytics: datasets, from-scratch classifiers, metrics,
forecasting, and the dashboard service."""

from .data import (
    ColumnSchema,
    Dataset,
    FeatureMatrix,
    LabelVector,
    Split,
    Violation,
    deserialize_dataset,
    ingest_csv,
    load_dataset,
    save_dataset,
    serialize_dataset,
    validate_dataset,
)
from .preprocess import (
    Scaler,
    drop_missing,
    split_xy,
    standardize_apply,
    standardize_fit,
    train_test_split,
)

__version__ = "0.1.0"
