"""Training all regressors and forecasting the occupancy of a horizon.

Date:
    10.19.2026

"""


__all__ = [
    "KIND_ALIASES",
    "ForecastRun",
    "resolve_kind",
    "fit_model",
    "train_and_evaluate",
    "forecast_occupancy",
]


import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, Mapping, Optional, Sequence

import numpy as np

from hems.errors import DomainError, InsufficientDataError, ValidationError
from hems.series import DEFAULT_HORIZON, HorizonSeries, Unit

from .ensembles import fit_gbm, fit_random_forest
from .features import DEFAULT_LAG_COUNT, SupervisedDataset, hour_encoding
from .metrics import MetricReport, evaluate_metrics, select_best_model
from .mlp import fit_mlp
from .models import KINDS, ForecastModel


logger = logging.getLogger(__name__)


KIND_ALIASES = {"rf": "random_forest", "random_forest": "random_forest",
                "gbm": "gbm", "mlp": "mlp"}


@dataclass
class ForecastRun:
    models: Dict[str, ForecastModel] = field(default_factory=dict)
    reports: Dict[str, MetricReport] = field(default_factory=dict)
    best: Optional[str] = None


def resolve_kind(kind: str) -> str:
    try:
        return KIND_ALIASES[kind]
    except KeyError:
        raise ValidationError(f"unknown model kind {kind!r}, expected one of "
                              f"{', '.join(sorted(KIND_ALIASES))}") from None


def fit_model(kind: str, data: SupervisedDataset, seed: int = 42, **options) -> ForecastModel:
    """Fit one regressor; ``options`` are passed to its fitter."""
    kind = resolve_kind(kind)
    if kind == "random_forest":
        return fit_random_forest(data, seed=seed, **options)
    if kind == "gbm":
        return fit_gbm(data, seed=seed, **options)
    return fit_mlp(data, seed=seed, **options)


def train_and_evaluate(data: SupervisedDataset,
                       kinds: Iterable[str] = KINDS,
                       seed: int = 42,
                       options: Optional[Mapping[str, Mapping]] = None) -> ForecastRun:
    """Fit every requested kind, score it on the held-out rows and pick the best."""
    if data.test_idx.shape[0] == 0:
        raise InsufficientDataError("dataset has no held-out rows to score")
    options = options or {}
    run = ForecastRun()
    for kind in (resolve_kind(k) for k in kinds):
        model = fit_model(kind, data, seed, **options.get(kind, {}))
        run.models[kind] = model
        run.reports[kind] = evaluate_metrics(model.predict(data.X_test), data.y_test)
        logger.info("model=%s rmse=%.6g mae=%.6g", kind, run.reports[kind].rmse,
                    run.reports[kind].mae)
    run.best = select_best_model(run.reports)
    return run


def forecast_occupancy(model: ForecastModel,
                       demand_history: Sequence[float],
                       horizon: int = DEFAULT_HORIZON,
                       *,
                       lag_count: int = DEFAULT_LAG_COUNT,
                       hours: Optional[Sequence[int]] = None,
                       demand_model: Optional[ForecastModel] = None,
                       normalize_by: Optional[float] = None) -> HorizonSeries:
    """Predicted occupancy over the ``horizon`` hours following the history.

    Only demand observed before the horizon is used. Lags that reach into
    the horizon are filled hour by hour: with the predictions of
    ``demand_model`` (a regressor fitted on demand targets over the same
    features) or, without one, with the demand observed a day earlier.

    Negative predictions are clipped to zero. With ``normalize_by`` the
    forecast is divided by it (the largest occupancy seen in training).
    """
    demand = np.asarray(demand_history, dtype=float).reshape(-1)
    n = demand.shape[0]
    needed = lag_count if demand_model is not None else max(lag_count, 24)
    if n < needed:
        raise InsufficientDataError(f"{n} hours of history cannot seed a {horizon}-hour forecast "
                                    f"({needed} needed)")
    if normalize_by is not None and normalize_by <= 0.0:
        raise DomainError(f"normalization constant must be positive, got {normalize_by}")
    last_hour = n - 1 if hours is None else int(np.asarray(hours).reshape(-1)[-1])
    future_hours = (last_hour + 1 + np.arange(horizon)) % 24

    series = list(demand)
    pred = np.empty(horizon)
    for j, hour in enumerate(future_hours):
        t = n + j
        lags = [series[t - k] for k in range(1, lag_count + 1)]
        row = np.concatenate([lags, hour_encoding([hour])[0]])[None, :]
        pred[j] = model.predict(row)[0]
        if demand_model is not None:
            series.append(max(float(demand_model.predict(row)[0]), 0.0))
        else:
            series.append(series[t - 24])
    pred = np.maximum(pred, 0.0)
    if normalize_by is not None:
        pred = pred / normalize_by
    logger.debug("forecast horizon=%d from %d hours, demand lags %s", horizon, n,
                 "predicted" if demand_model is not None else "from the previous day")
    return HorizonSeries(pred, Unit.PERSONS)
