"""Generate a synthetic city-KPI dataset with the same shape as the real
Edmonton extract: 1158 rows, 8 columns, the published per-column missing
counts, and exactly 43 complete rows (so a 0.3 test fraction holds out 13).

The five head rows are the known public head of the real table; everything
else is sampled. Usage:

    python scripts/make_demo_dataset.py --out-csv data/demo.csv --out-json data/demo.json
"""

from __future__ import annotations

import argparse
import csv
import sys
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from citykpi.data import ingest_csv, save_dataset  # noqa: E402

COLUMNS = [
    "UNEMPLOYMENT_RATE",
    "National_Unemployment_Rate",
    "Impaired Driving Incidents",
    "90_RIGHT_ENERGY",
    "Edmonton CMA - Working Age Population Growth",
    "Edmonton CMA - Labour Force Growth",
    "Edmonton CMA - Employment Growth",
    "governance",
]

HEAD_ROWS = [
    [7.1, 8.4, 454.0, 895.67, 1.8, 1.3, -1.6, 1],
    [7.2, 8.4, 517.0, 875.08, 1.7, 0.4, -1.9, 0],
    [7.5, 8.3, 468.0, 1077.25, 1.6, -0.7, -3.1, 0],
    [7.7, 8.3, 632.0, 824.25, 1.6, -0.4, -2.9, 0],
    [7.4, 8.2, 464.0, 1197.25, 1.5, -0.2, -0.7, 1],
]

N_ROWS = 1158
N_COMPLETE = 43
# Non-null counts per column in the real extract.
NON_NULL = {
    "UNEMPLOYMENT_RATE": 153,
    "National_Unemployment_Rate": 153,
    "Impaired Driving Incidents": 43,
    "90_RIGHT_ENERGY": 387,
    "Edmonton CMA - Working Age Population Growth": 98,
    "Edmonton CMA - Labour Force Growth": 98,
    "Edmonton CMA - Employment Growth": 98,
    "governance": 1158,
}


def _complete_rows(rng: np.random.Generator) -> list[list[float]]:
    """43 complete rows on a shared latent factor; the strongest negative
    pair (unemployment vs working-age growth) lands near -0.77."""
    rows = [list(r) for r in HEAD_ROWS]
    n = N_COMPLETE - len(rows)
    latent = rng.normal(size=n)

    unemployment = 7.4 + 0.35 * latent + 0.12 * rng.normal(size=n)
    national = 8.3 + 0.30 * latent + 0.10 * rng.normal(size=n)
    impaired = 500 + 25 * latent + 70 * rng.normal(size=n)
    energy = 980 - 40 * latent + 140 * rng.normal(size=n)
    working_age = 1.6 - 0.28 * latent + 0.17 * rng.normal(size=n)
    labour = 0.2 - 0.9 * latent + 0.7 * rng.normal(size=n)
    employment = -2.0 - 0.8 * latent + 0.8 * rng.normal(size=n)

    logits = -1.1 * latent + 0.8 * rng.normal(size=n)
    governance = (rng.random(size=n) < 1 / (1 + np.exp(-logits))).astype(int)

    for i in range(n):
        rows.append(
            [
                round(float(unemployment[i]), 1),
                round(float(national[i]), 1),
                round(float(impaired[i]), 0),
                round(float(energy[i]), 2),
                round(float(working_age[i]), 1),
                round(float(labour[i]), 1),
                round(float(employment[i]), 1),
                int(governance[i]),
            ]
        )
    return rows


def make_edmonton_like(seed: int = 24) -> tuple[list[str], list[list[float | None]]]:
    rng = np.random.default_rng(seed)
    rows: list[list[float | None]] = [[None] * len(COLUMNS) for _ in range(N_ROWS)]

    for i, complete in enumerate(_complete_rows(rng)):
        rows[i] = list(complete)

    def fill(column: str, start: int, values) -> None:
        j = COLUMNS.index(column)
        for offset, value in enumerate(values):
            rows[start + offset][j] = value

    # Partial coverage continues past the complete block; each of these rows
    # stays incomplete because impaired-driving data stops at row 42.
    extra_unemp = NON_NULL["UNEMPLOYMENT_RATE"] - N_COMPLETE
    trend = 7.2 + 0.012 * np.arange(extra_unemp) + 0.25 * rng.normal(size=extra_unemp)
    fill("UNEMPLOYMENT_RATE", N_COMPLETE, [round(float(v), 1) for v in trend])
    fill(
        "National_Unemployment_Rate",
        N_COMPLETE,
        [round(float(v), 1) for v in trend + 0.9 + 0.15 * rng.normal(size=extra_unemp)],
    )

    extra_energy = NON_NULL["90_RIGHT_ENERGY"] - N_COMPLETE
    energy = 950 + 0.35 * np.arange(extra_energy) + 120 * rng.normal(size=extra_energy)
    fill("90_RIGHT_ENERGY", N_COMPLETE, [round(float(v), 2) for v in energy])

    extra_growth = NON_NULL["Edmonton CMA - Working Age Population Growth"] - N_COMPLETE
    for column, base in (
        ("Edmonton CMA - Working Age Population Growth", 1.6),
        ("Edmonton CMA - Labour Force Growth", 0.3),
        ("Edmonton CMA - Employment Growth", -1.5),
    ):
        values = base + 0.8 * rng.normal(size=extra_growth)
        fill(column, N_COMPLETE, [round(float(v), 1) for v in values])

    j = COLUMNS.index("governance")
    for i in range(N_ROWS):
        if rows[i][j] is None:
            rows[i][j] = int(rng.random() < 0.45)
    return COLUMNS, rows


def write_csv(path: Path, header: list[str], rows: list[list[float | None]]) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for row in rows:
            writer.writerow(["" if cell is None else cell for cell in row])


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-csv", default="data/demo.csv")
    parser.add_argument("--out-json", default=None)
    parser.add_argument("--seed", type=int, default=24)
    args = parser.parse_args(argv)

    header, rows = make_edmonton_like(args.seed)
    csv_path = Path(args.out_csv)
    write_csv(csv_path, header, rows)
    print(f"wrote {csv_path} ({len(rows)} rows)")

    if args.out_json:
        dataset = ingest_csv(csv_path)
        save_dataset(dataset, args.out_json)
        print(f"wrote {args.out_json}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
