"""Batch driver: ingest -> analyze -> compare -> forecast -> serve.

Exit codes: 0 success, 1 data error (bad file contents, unknown column,
dataset too small), 2 usage error (argparse handles unknown flags and bad
flag values).
"""

from __future__ import annotations

import argparse
import os
import sys

from .data import canonical_json, ingest_csv, load_dataset, save_dataset, validate_dataset
from .errors import CityKpiError
from .pipeline import analytics_report, compare_models, forecast_column


def _default_seed() -> int:
    return int(os.environ.get("CITYKPI_SEED", "0"))


def _fraction(text: str) -> float:
    value = float(text)
    if not (0.0 < value < 1.0):
        raise argparse.ArgumentTypeError("must be in (0,1)")
    return value


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _confidence(text: str) -> float:
    value = float(text)
    if not (0.0 < value < 1.0):
        raise argparse.ArgumentTypeError("must be in (0,1)")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="citykpi", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="read a CSV into canonical dataset JSON")
    p.add_argument("--input", required=True, help="CSV file with a header row")
    p.add_argument("--schema", help="sidecar schema JSON assigning column roles")
    p.add_argument("--out", required=True, help="dataset JSON destination")
    p.add_argument("--json", action="store_true", help="machine-readable summary")

    p = sub.add_parser("analyze", help="correlations, group means, histograms, outliers")
    p.add_argument("--dataset", required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("compare", help="train all five classifiers on one split")
    p.add_argument("--dataset", required=True)
    p.add_argument("--seed", type=int, default=None, help="default CITYKPI_SEED or 0")
    p.add_argument("--test-fraction", type=_fraction, default=0.3)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("forecast", help="Holt trend forecast with bounds")
    p.add_argument("--dataset", required=True)
    p.add_argument("--column", required=True)
    p.add_argument("--horizon", type=_positive_int, required=True)
    p.add_argument("--confidence", type=_confidence, default=0.95)
    p.add_argument("--alpha", type=float, default=0.5)
    p.add_argument("--beta", type=float, default=0.3)
    p.add_argument("--json", action="store_true")
    p.add_argument(
        "--plot-data", action="store_true", help="emit (t, value) series JSON"
    )

    p = sub.add_parser("serve", help="start the dashboard HTTP API")
    p.add_argument("--dataset", required=True)
    p.add_argument("--models-dir", default="models")
    p.add_argument("--host", default=None)
    p.add_argument("--port", type=int, default=None)
    return parser


def _cmd_ingest(args) -> int:
    dataset = ingest_csv(args.input, args.schema)
    violations = validate_dataset(dataset)
    if violations:
        for v in violations:
            print(f"invalid dataset: {v}", file=sys.stderr)
        return 1
    save_dataset(dataset, args.out)
    missing = dataset.missing_counts()
    if args.json:
        print(
            canonical_json(
                {
                    "rows": dataset.row_count,
                    "columns": len(dataset.schema),
                    "missing": missing,
                    "out": args.out,
                }
            )
        )
    else:
        print(f"{dataset.row_count} rows, {len(dataset.schema)} columns -> {args.out}")
        print("missing values per column:")
        width = max(len(n) for n in missing)
        for name, count in missing.items():
            print(f"  {name:<{width}}  {count}")
    return 0


def _cmd_analyze(args) -> int:
    dataset = load_dataset(args.dataset)
    doc = analytics_report(dataset)
    if args.json:
        print(canonical_json(doc))
        return 0
    corr = doc["correlations"]
    print("correlations:")
    names = corr["names"]
    width = max(len(n) for n in names)
    for name, row in zip(names, corr["values"]):
        cells = " ".join(f"{v:+.2f}" for v in row)
        print(f"  {name:<{width}}  {cells}")
    if doc["groups"]:
        print("group means by target:")
        for value, group in sorted(doc["groups"]["groups"].items()):
            print(f"  target={value} (n={group['count']})")
            for feat, mean in group["means"].items():
                shown = "n/a" if mean is None else f"{mean:.4f}"
                print(f"    {feat:<{width}}  {shown}")
    flagged = {k: v for k, v in doc["outliers"].items() if v}
    print(f"outlier rows: {flagged if flagged else 'none'}")
    return 0


def _cmd_compare(args) -> int:
    dataset = load_dataset(args.dataset)
    seed = _default_seed() if args.seed is None else args.seed
    result = compare_models(dataset, seed=seed, test_fraction=args.test_fraction)
    result.pop("_runs")
    if args.json:
        print(canonical_json(result))
        return 0
    print(
        f"n={result['n_rows']} train={result['n_train']} test={result['n_test']} "
        f"seed={seed} test_fraction={args.test_fraction}"
    )
    print(f"{'model':<8} {'accuracy':>9} {'log_loss':>9} {'auc':>7}")
    for row in result["rows"]:
        print(
            f"{row['model']:<8} {row['accuracy']:>9.4f} "
            f"{row['log_loss']:>9.4f} {row['auc']:>7.4f}"
        )
    print(f"best by accuracy: {', '.join(result['best'])}")
    return 0


def _cmd_forecast(args) -> int:
    dataset = load_dataset(args.dataset)
    try:
        doc = forecast_column(
            dataset,
            args.column,
            args.horizon,
            alpha=args.alpha,
            beta=args.beta,
            confidence=args.confidence,
        )
    except KeyError:
        print(f"error: unknown column {args.column!r}", file=sys.stderr)
        return 1
    if args.plot_data:
        series = [v for v in dataset.column(args.column) if v is not None]
        doc["series"] = [[t, v] for t, v in enumerate(series)]
    if args.json or args.plot_data:
        print(canonical_json(doc))
        return 0
    print(f"forecast of {args.column!r}, confidence {args.confidence}")
    print(f"{'step':>4} {'point':>12} {'lower':>12} {'upper':>12}")
    for h, step in enumerate(doc["steps"], start=1):
        print(f"{h:>4} {step['point']:>12.4f} {step['lower']:>12.4f} {step['upper']:>12.4f}")
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import ServiceConfig, create_app

    overrides = {"dataset_path": args.dataset, "models_dir": args.models_dir}
    if args.host is not None:
        overrides["host"] = args.host
    if args.port is not None:
        overrides["port"] = args.port
    config = ServiceConfig.from_env(**overrides)
    app = create_app(config)
    uvicorn.run(app, host=config.host, port=config.port, log_level="warning")
    return 0


_COMMANDS = {
    "ingest": _cmd_ingest,
    "analyze": _cmd_analyze,
    "compare": _cmd_compare,
    "forecast": _cmd_forecast,
    "serve": _cmd_serve,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (CityKpiError, FileNotFoundError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
