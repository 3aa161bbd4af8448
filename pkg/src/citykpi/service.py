"""HTTP/JSON API for the dashboard: dataset summary, training jobs, metric
what-ifs, analytics, and forecasts.

Trained models are flat JSON files in the models directory (one per model
id). The held-out probabilities are persisted with each model, so the
threshold endpoint never retrains. The dataset and registry are replaced
copy-on-write, so concurrent reads always see a consistent snapshot.
"""

from __future__ import annotations

import json
import os
import threading
import uuid
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import BackgroundTasks, FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .data import Dataset, canonical_json, load_dataset
from .errors import CityKpiError, EmptyResultError, SeriesTooShortError
from .models import MODEL_KINDS, TrainConfig
from .pipeline import Evaluation, analytics_report, column_summary, forecast_column, train_one


@dataclass
class ServiceConfig:
    dataset_path: str | None = None
    models_dir: str = "models"
    host: str = "127.0.0.1"
    port: int = 8000
    default_seed: int = 0
    default_test_fraction: float = 0.3

    def __post_init__(self):
        if not (1 <= self.port <= 65535):
            raise ValueError("port must be in 1..65535")

    @classmethod
    def from_env(cls, **overrides) -> "ServiceConfig":
        addr = os.environ.get("CITYKPI_ADDR")
        if addr and "host" not in overrides:
            host, _, port = addr.rpartition(":")
            overrides.setdefault("host", host or "127.0.0.1")
            overrides.setdefault("port", int(port))
        return cls(**overrides)


@dataclass
class JobRecord:
    id: str
    kind: str  # train | evaluate | forecast
    status: str = "queued"  # queued -> running -> done | failed
    result: str | None = None  # locator, e.g. a model id
    error: str | None = None

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "kind": self.kind,
            "status": self.status,
            "result": self.result,
            "error": self.error,
        }


_STATUS_ORDER = {"queued": 0, "running": 1, "done": 2, "failed": 2}


def _advance(job: JobRecord, status: str) -> None:
    # Transitions only move forward.
    if _STATUS_ORDER[status] < _STATUS_ORDER[job.status]:
        raise ValueError(f"job cannot move {job.status} -> {status}")
    job.status = status


def _error_response(status: int, code: str, message: str) -> JSONResponse:
    return JSONResponse(
        status_code=status, content={"error": {"code": code, "message": message}}
    )


@dataclass
class _Registry:
    """Read-mostly model index; mutation swaps the dict under a lock."""

    models_dir: Path
    entries: dict[str, dict] = field(default_factory=dict)
    lock: threading.Lock = field(default_factory=threading.Lock)

    def scan(self) -> None:
        entries = {}
        for path in sorted(self.models_dir.glob("*.json")):
            try:
                doc = json.loads(path.read_text())
                entries[doc["id"]] = self._entry(doc, path)
            except (json.JSONDecodeError, KeyError):
                continue  # not a model file
        with self.lock:
            self.entries = entries

    @staticmethod
    def _entry(doc: dict, path: Path) -> dict:
        ev = doc["evaluation"]
        return {
            "id": doc["id"],
            "kind": doc["kind"],
            "seed": ev["seed"],
            "test_fraction": ev["test_fraction"],
            "accuracy": ev["accuracy"],
            "auc": ev["auc"],
            "log_loss": ev["log_loss"],
            "trained_at": doc["trained_at"],
            "path": str(path),
        }

    def add(self, doc: dict, path: Path) -> None:
        with self.lock:
            entries = dict(self.entries)
            entries[doc["id"]] = self._entry(doc, path)
            self.entries = entries

    def get(self, model_id: str) -> dict | None:
        return self.entries.get(model_id)

    def list(self) -> list[dict]:
        return [self.entries[k] for k in sorted(self.entries)]


def create_app(config: ServiceConfig | None = None) -> FastAPI:
    config = config or ServiceConfig.from_env()
    app = FastAPI(title="citykpi")
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )

    models_dir = Path(config.models_dir)
    models_dir.mkdir(parents=True, exist_ok=True)
    registry = _Registry(models_dir=models_dir)
    registry.scan()

    state = {
        "dataset": load_dataset(config.dataset_path) if config.dataset_path else None,
        "jobs": {},
        "jobs_lock": threading.Lock(),
        "write_lock": threading.Lock(),
    }
    app.state.citykpi = state
    app.state.config = config
    app.state.registry = registry

    @app.exception_handler(CityKpiError)
    async def _citykpi_error(request: Request, exc: CityKpiError):
        return _error_response(422, type(exc).__name__, str(exc))

    @app.exception_handler(RequestValidationError)
    async def _validation_error(request: Request, exc: RequestValidationError):
        return _error_response(400, "BadRequest", str(exc.errors()))

    def _dataset() -> Dataset:
        dataset = state["dataset"]
        if dataset is None:
            raise ServiceUnavailable()
        return dataset

    class ServiceUnavailable(Exception):
        pass

    @app.exception_handler(ServiceUnavailable)
    async def _no_dataset(request: Request, exc: ServiceUnavailable):
        return _error_response(503, "NoDataset", "no dataset loaded")

    @app.get("/api/summary")
    def summary():
        dataset = _dataset()
        if not any(all(cell is not None for cell in row) for row in dataset.rows):
            raise EmptyResultError("dataset has no complete rows")
        return column_summary(dataset)

    @app.post("/api/train")
    def train(body: dict, background: BackgroundTasks):
        dataset = _dataset()
        kind = body.get("model_kind")
        if kind not in MODEL_KINDS:
            return _error_response(
                400, "BadModelKind", f"model_kind must be one of {list(MODEL_KINDS)}"
            )
        seed = body.get("seed", config.default_seed)
        test_fraction = body.get("test_fraction", config.default_test_fraction)
        if not isinstance(seed, int):
            return _error_response(400, "BadSeed", "seed must be an integer")
        if not (isinstance(test_fraction, (int, float)) and 0 < test_fraction < 1):
            return _error_response(400, "BadFraction", "test_fraction must be in (0,1)")
        try:
            train_config = TrainConfig.from_dict(body.get("hyperparameters") or {})
        except (ValueError, TypeError) as exc:
            return _error_response(400, "BadHyperparameters", str(exc))

        job = JobRecord(id=uuid.uuid4().hex, kind="train")
        with state["jobs_lock"]:
            state["jobs"][job.id] = job
        background.add_task(
            _run_training, job, dataset, kind, seed, float(test_fraction), train_config
        )
        return job.to_dict()

    def _run_training(job, dataset, kind, seed, test_fraction, train_config):
        _advance(job, "running")
        try:
            run = train_one(dataset, kind, seed, test_fraction, train_config)
            doc = run.trained.to_dict()
            doc["id"] = run.id
            doc["evaluation"] = {
                "seed": run.seed,
                "test_fraction": run.test_fraction,
                "test_indices": list(run.test_indices),
                "y_true": list(run.evaluation.y_true),
                "probs": list(run.evaluation.probs),
                "accuracy": run.evaluation.metrics_at(train_config.threshold)["report"][
                    "accuracy"
                ],
                "auc": run.evaluation.auc,
                "log_loss": run.evaluation.log_loss,
            }
            path = models_dir / f"{run.id}.json"
            with state["write_lock"]:  # serializes writes of the same model id
                path.write_text(canonical_json(doc))
                registry.add(doc, path)
            job.result = run.id
            _advance(job, "done")
        except Exception as exc:  # job failure is data, not a crash
            job.error = f"{type(exc).__name__}: {exc}"
            _advance(job, "failed")

    @app.get("/api/jobs/{job_id}")
    def job_status(job_id: str):
        job = state["jobs"].get(job_id)
        if job is None:
            return _error_response(404, "UnknownJob", f"no job {job_id!r}")
        return job.to_dict()

    @app.get("/api/models")
    def list_models():
        return {"models": registry.list()}

    @app.get("/api/models/{model_id}")
    def model_detail(model_id: str):
        entry = registry.get(model_id)
        if entry is None:
            return _error_response(404, "UnknownModel", f"no model {model_id!r}")
        return json.loads(Path(entry["path"]).read_text())

    @app.get("/api/models/{model_id}/metrics")
    def model_metrics(model_id: str, threshold: float = 0.5):
        entry = registry.get(model_id)
        if entry is None:
            return _error_response(404, "UnknownModel", f"no model {model_id!r}")
        if not (0.0 <= threshold <= 1.0):
            return _error_response(400, "BadThreshold", "threshold must be in [0,1]")
        doc = json.loads(Path(entry["path"]).read_text())
        ev = doc["evaluation"]
        evaluation = Evaluation(
            y_true=tuple(ev["y_true"]),
            probs=tuple(ev["probs"]),
            auc=ev["auc"],
            log_loss=ev["log_loss"],
        )
        out = evaluation.metrics_at(threshold)
        out["model_id"] = model_id
        out["kind"] = doc["kind"]
        return out

    @app.get("/api/analytics")
    def analytics():
        return analytics_report(_dataset())

    @app.get("/api/forecast")
    def forecast(
        column: str,
        horizon: int,
        confidence: float = 0.95,
        alpha: float = 0.5,
        beta: float = 0.3,
        history: bool = False,
    ):
        dataset = _dataset()
        if horizon < 1:
            return _error_response(400, "BadHorizon", "horizon must be >= 1")
        if not (0.0 < confidence < 1.0):
            return _error_response(400, "BadConfidence", "confidence must be in (0,1)")
        try:
            doc = forecast_column(
                dataset, column, horizon, alpha=alpha, beta=beta, confidence=confidence
            )
        except KeyError:
            return _error_response(404, "UnknownColumn", f"no column {column!r}")
        except SeriesTooShortError as exc:
            return _error_response(422, "SeriesTooShort", str(exc))
        if history:  # the chart draws observed values behind the forecast band
            series = [v for v in dataset.column(column) if v is not None]
            doc["series"] = [[t, v] for t, v in enumerate(series)]
        return doc

    return app


def main(argv=None) -> int:
    """Run the service under uvicorn (also reachable as `citykpi serve`)."""
    import argparse

    import uvicorn

    parser = argparse.ArgumentParser(prog="citykpi-service")
    parser.add_argument("--dataset", required=True)
    parser.add_argument("--models-dir", default="models")
    parser.add_argument("--host", default=None)
    parser.add_argument("--port", type=int, default=None)
    args = parser.parse_args(argv)

    overrides = {"dataset_path": args.dataset, "models_dir": args.models_dir}
    if args.host is not None:
        overrides["host"] = args.host
    if args.port is not None:
        overrides["port"] = args.port
    config = ServiceConfig.from_env(**overrides)
    app = create_app(config)
    uvicorn.run(app, host=config.host, port=config.port, log_level="warning")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
