"""End-to-end study driver: ingest a KPI CSV, print the data profile,
exploratory analysis, the five-model comparison, and two forecasts.

    python scripts/run_study.py --csv data/demo.csv --seed 0
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from citykpi.data import ingest_csv  # noqa: E402
from citykpi.pipeline import (  # noqa: E402
    analytics_report,
    column_summary,
    compare_models,
    forecast_column,
)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--csv", default="data/demo.csv")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--test-fraction", type=float, default=0.3)
    parser.add_argument("--horizon", type=int, default=5)
    args = parser.parse_args(argv)

    dataset = ingest_csv(args.csv)
    summary = column_summary(dataset)
    print(f"== dataset: {args.csv} ({summary['row_count']} rows) ==")
    for col in summary["columns"]:
        mean = "-" if col["mean"] is None else f"{col['mean']:.3f}"
        print(f"  {col['name'][:44]:<44} non-null {col['non_null']:>5}  mean {mean}")

    print("\n== exploratory analysis (complete rows only) ==")
    analysis = analytics_report(dataset)
    names = analysis["correlations"]["names"]
    values = analysis["correlations"]["values"]
    flat = [
        (values[i][j], names[i], names[j])
        for i in range(len(names))
        for j in range(i + 1, len(names))
    ]
    low = min(flat)
    high = max(flat)
    print(f"  strongest +corr: {high[1]} ~ {high[2]}: {high[0]:+.3f}")
    print(f"  strongest -corr: {low[1]} ~ {low[2]}: {low[0]:+.3f}")
    for value, group in sorted(analysis["groups"]["groups"].items()):
        print(f"  group target={value}: n={group['count']}")

    print(f"\n== model comparison (seed {args.seed}) ==")
    result = compare_models(dataset, seed=args.seed, test_fraction=args.test_fraction)
    print(f"  train {result['n_train']} / test {result['n_test']}")
    print(f"  {'model':<8} {'accuracy':>9} {'log_loss':>9} {'auc':>7}")
    for row in result["rows"]:
        print(
            f"  {row['model']:<8} {row['accuracy']:>9.4f} "
            f"{row['log_loss']:>9.4f} {row['auc']:>7.4f}"
        )
    print(f"  best: {', '.join(result['best'])}")

    print(f"\n== forecasts (horizon {args.horizon}, 95% bounds) ==")
    for column in (names[0], names[3] if len(names) > 3 else names[-1]):
        try:
            doc = forecast_column(dataset, column, args.horizon)
        except Exception as exc:
            print(f"  {column}: skipped ({exc})")
            continue
        last = doc["steps"][-1]
        print(
            f"  {column}: h={args.horizon} -> {last['point']:.2f} "
            f"[{last['lower']:.2f}, {last['upper']:.2f}]"
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
