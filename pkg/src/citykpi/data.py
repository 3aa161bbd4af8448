"""Canonical data model: datasets, design matrices, labels, splits.

A Dataset stores raw KPI records exactly as ingested: each cell is either a
finite float or MISSING (represented as None). All types are immutable after
construction and safe to share across threads.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from .errors import DataFormatError

FEATURE = "feature"
TARGET = "target"

MISSING = None


@dataclass(frozen=True)
class ColumnSchema:
    name: str
    role: str = FEATURE
    unit: str | None = None


@dataclass(frozen=True)
class Dataset:
    schema: tuple[ColumnSchema, ...]
    rows: tuple[tuple[float | None, ...], ...]

    @property
    def row_count(self) -> int:
        return len(self.rows)

    @property
    def column_names(self) -> tuple[str, ...]:
        return tuple(c.name for c in self.schema)

    @property
    def target_index(self) -> int | None:
        for i, c in enumerate(self.schema):
            if c.role == TARGET:
                return i
        return None

    def column(self, name: str) -> list[float | None]:
        try:
            j = self.column_names.index(name)
        except ValueError:
            raise KeyError(name) from None
        return [r[j] for r in self.rows]

    def missing_counts(self) -> dict[str, int]:
        counts = {c.name: 0 for c in self.schema}
        for row in self.rows:
            for c, cell in zip(self.schema, row):
                if cell is MISSING:
                    counts[c.name] += 1
        return counts


@dataclass(frozen=True, eq=False)
class FeatureMatrix:
    values: np.ndarray
    feature_names: tuple[str, ...]

    def __post_init__(self):
        arr = np.asarray(self.values, dtype=np.float64)
        if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ValueError("feature matrix must be n x p with n >= 1, p >= 1")
        if not np.all(np.isfinite(arr)):
            raise ValueError("feature matrix entries must be finite")
        if arr.shape[1] != len(self.feature_names):
            raise ValueError("feature_names length must match column count")
        arr.flags.writeable = False
        object.__setattr__(self, "values", arr)

    @property
    def n(self) -> int:
        return self.values.shape[0]

    @property
    def p(self) -> int:
        return self.values.shape[1]


@dataclass(frozen=True, eq=False)
class LabelVector:
    labels: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.labels, dtype=np.int64)
        if arr.ndim != 1:
            raise ValueError("labels must be one-dimensional")
        if not np.all((arr == 0) | (arr == 1)):
            raise ValueError("labels must be 0 or 1")
        arr.flags.writeable = False
        object.__setattr__(self, "labels", arr)

    def __len__(self) -> int:
        return int(self.labels.shape[0])


@dataclass(frozen=True)
class Split:
    train_indices: tuple[int, ...]
    test_indices: tuple[int, ...]
    seed: int
    test_fraction: float


@dataclass(frozen=True)
class Violation:
    rule: str
    row: int | None = None
    column: str | None = None

    def __str__(self) -> str:
        where = []
        if self.row is not None:
            where.append(f"row {self.row}")
        if self.column is not None:
            where.append(f"column {self.column!r}")
        return f"{self.rule}" + (f" ({', '.join(where)})" if where else "")


def validate_dataset(dataset: Dataset) -> list[Violation]:
    """Check every Dataset invariant; violations are data, not errors."""
    violations: list[Violation] = []
    seen: set[str] = set()
    for col in dataset.schema:
        if not col.name:
            violations.append(Violation("empty column name", column=col.name))
        elif col.name in seen:
            violations.append(Violation("duplicate column name", column=col.name))
        seen.add(col.name)
        if col.role not in (FEATURE, TARGET):
            violations.append(Violation(f"unknown role {col.role!r}", column=col.name))

    target_cols = [c.name for c in dataset.schema if c.role == TARGET]
    if len(target_cols) > 1:
        violations.append(Violation("more than one target column"))

    width = len(dataset.schema)
    for i, row in enumerate(dataset.rows):
        if len(row) != width:
            violations.append(Violation("row width does not match schema", row=i))
            continue
        for col, cell in zip(dataset.schema, row):
            if cell is MISSING:
                continue
            if not isinstance(cell, (int, float)) or not math.isfinite(cell):
                violations.append(Violation("non-finite value", row=i, column=col.name))
            elif col.role == TARGET and cell not in (0, 1):
                violations.append(Violation("target not in {0,1}", row=i, column=col.name))
    return violations


# ---------------------------------------------------------------------------
# Canonical JSON
# ---------------------------------------------------------------------------

def canonical_json(obj) -> str:
    """Stable byte-for-byte JSON: sorted keys, no whitespace, strict numbers."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), allow_nan=False)


def dataset_to_dict(dataset: Dataset) -> dict:
    return {
        "schema": [
            {"name": c.name, "role": c.role, "unit": c.unit} for c in dataset.schema
        ],
        "rows": [list(row) for row in dataset.rows],
    }


def serialize_dataset(dataset: Dataset) -> str:
    return canonical_json(dataset_to_dict(dataset))


def dataset_from_dict(doc: dict) -> Dataset:
    if not isinstance(doc, dict) or "schema" not in doc or "rows" not in doc:
        raise DataFormatError("dataset JSON must have 'schema' and 'rows'")
    schema = []
    for entry in doc["schema"]:
        try:
            schema.append(
                ColumnSchema(
                    name=entry["name"],
                    role=entry.get("role", FEATURE),
                    unit=entry.get("unit"),
                )
            )
        except (TypeError, KeyError) as exc:
            raise DataFormatError(f"bad schema entry: {entry!r}") from exc
    rows = []
    for i, raw in enumerate(doc["rows"]):
        cells = []
        for cell in raw:
            if cell is None:
                cells.append(MISSING)
            elif isinstance(cell, (int, float)):
                value = float(cell)
                if math.isnan(value):
                    cells.append(MISSING)
                elif math.isinf(value):
                    raise DataFormatError(f"infinite value in row {i}")
                else:
                    cells.append(value)
            else:
                raise DataFormatError(f"non-numeric cell in row {i}: {cell!r}")
        rows.append(tuple(cells))
    return Dataset(schema=tuple(schema), rows=tuple(rows))


def deserialize_dataset(text: str) -> Dataset:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DataFormatError(f"invalid JSON: {exc}") from exc
    return dataset_from_dict(doc)


def load_dataset(path: str | Path) -> Dataset:
    return deserialize_dataset(Path(path).read_text())


def save_dataset(dataset: Dataset, path: str | Path) -> None:
    Path(path).write_text(serialize_dataset(dataset))


# ---------------------------------------------------------------------------
# CSV ingestion
# ---------------------------------------------------------------------------

def _parse_cell(text: str, row: int, column: str) -> float | None:
    stripped = text.strip()
    if stripped == "" or stripped.lower() == "nan":
        return MISSING
    try:
        value = float(stripped)
    except ValueError:
        raise DataFormatError(
            f"cell is not numeric (row {row}, column {column!r}): {text!r}"
        ) from None
    if not math.isfinite(value):
        raise DataFormatError(f"non-finite cell (row {row}, column {column!r})")
    return value


def _schema_from_sidecar(doc, names: Sequence[str]) -> tuple[ColumnSchema, ...]:
    entries = doc.get("schema") if isinstance(doc, dict) else doc
    if not isinstance(entries, list):
        raise DataFormatError("schema sidecar must be a list or {'schema': [...]}")
    by_name = {}
    for entry in entries:
        try:
            by_name[entry["name"]] = ColumnSchema(
                name=entry["name"],
                role=entry.get("role", FEATURE),
                unit=entry.get("unit"),
            )
        except (TypeError, KeyError) as exc:
            raise DataFormatError(f"bad schema entry: {entry!r}") from exc
    return tuple(by_name.get(n, ColumnSchema(name=n)) for n in names)


def ingest_csv(path: str | Path, schema_path: str | Path | None = None) -> Dataset:
    """Read a headered CSV into a Dataset.

    Empty fields and the literal "NaN" become MISSING. Without a sidecar
    schema the last column is the target, every other column a feature.
    """
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise DataFormatError("CSV file is empty") from None
        names = [h.strip() for h in header]
        if any(not n for n in names):
            raise DataFormatError("CSV header has an empty column name")
        rows = []
        for i, record in enumerate(reader):
            if len(record) != len(names):
                raise DataFormatError(
                    f"row {i} has {len(record)} cells, expected {len(names)}"
                )
            rows.append(
                tuple(_parse_cell(cell, i, names[j]) for j, cell in enumerate(record))
            )

    if schema_path is not None:
        try:
            doc = json.loads(Path(schema_path).read_text())
        except json.JSONDecodeError as exc:
            raise DataFormatError(f"invalid schema JSON: {exc}") from exc
        schema = _schema_from_sidecar(doc, names)
    else:
        schema = tuple(
            ColumnSchema(name=n, role=TARGET if j == len(names) - 1 else FEATURE)
            for j, n in enumerate(names)
        )
    return Dataset(schema=schema, rows=tuple(rows))
