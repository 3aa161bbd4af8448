import importlib.util
from pathlib import Path

import numpy as np
import pytest

from citykpi.data import ColumnSchema, Dataset, ingest_csv, save_dataset

REPO = Path(__file__).resolve().parents[1]


def load_script(name: str):
    spec = importlib.util.spec_from_file_location(name, REPO / "scripts" / f"{name}.py")
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return module


# Head of the public city-KPI table; row 0 is used as a known X/y example.
EDMONTON_COLUMNS = [
    "UNEMPLOYMENT_RATE",
    "National_Unemployment_Rate",
    "Impaired Driving Incidents",
    "90_RIGHT_ENERGY",
    "Edmonton CMA - Working Age Population Growth",
    "Edmonton CMA - Labour Force Growth",
    "Edmonton CMA - Employment Growth",
    "governance",
]

EDMONTON_HEAD = [
    (7.1, 8.4, 454.0, 895.67, 1.8, 1.3, -1.6, 1.0),
    (7.2, 8.4, 517.0, 875.08, 1.7, 0.4, -1.9, 0.0),
    (7.5, 8.3, 468.0, 1077.25, 1.6, -0.7, -3.1, 0.0),
    (7.7, 8.3, 632.0, 824.25, 1.6, -0.4, -2.9, 0.0),
    (7.4, 8.2, 464.0, 1197.25, 1.5, -0.2, -0.7, 1.0),
]


def edmonton_schema() -> tuple[ColumnSchema, ...]:
    return tuple(
        ColumnSchema(name=n, role="target" if n == "governance" else "feature")
        for n in EDMONTON_COLUMNS
    )


@pytest.fixture
def head_dataset() -> Dataset:
    return Dataset(schema=edmonton_schema(), rows=tuple(EDMONTON_HEAD))


@pytest.fixture(scope="session")
def demo_paths(tmp_path_factory):
    """Synthetic dataset with the real extract's shape (1158 rows, 43 complete)."""
    gen = load_script("make_demo_dataset")
    root = tmp_path_factory.mktemp("demo")
    csv_path = root / "demo.csv"
    json_path = root / "demo.json"
    header, rows = gen.make_edmonton_like(24)
    gen.write_csv(csv_path, header, rows)
    save_dataset(ingest_csv(csv_path), json_path)
    return {"csv": csv_path, "json": json_path}


def separable_dataset(n: int = 60, seed: int = 3) -> Dataset:
    """Linearly separable two-feature set with a wide margin."""
    rng = np.random.default_rng(seed)
    rows = []
    for _ in range(n):
        label = int(rng.random() < 0.5)
        base = 3.0 if label else -3.0
        rows.append(
            (
                base + rng.normal(scale=0.5),
                base / 2 + rng.normal(scale=0.5),
                float(label),
            )
        )
    schema = (
        ColumnSchema(name="f1"),
        ColumnSchema(name="f2"),
        ColumnSchema(name="label", role="target"),
    )
    return Dataset(schema=schema, rows=tuple(rows))
