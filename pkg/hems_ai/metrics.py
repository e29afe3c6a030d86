"""Regression error metrics and model selection.

Date:
    10.19.2026

"""


__all__ = [
    "MetricReport",
    "evaluate_metrics",
    "select_best_model",
]


from dataclasses import asdict, dataclass
from typing import Mapping

import numpy as np

from hems.errors import DomainError, ValidationError

from .models import KINDS


@dataclass(frozen=True)
class MetricReport:
    mse: float
    rmse: float
    mae: float

    def __post_init__(self) -> None:
        if min(self.mse, self.rmse, self.mae) < 0.0:
            raise DomainError("error metrics must be non-negative")

    def as_dict(self) -> dict:
        return asdict(self)


def evaluate_metrics(predicted, actual) -> MetricReport:
    predicted = np.asarray(predicted, dtype=float).reshape(-1)
    actual = np.asarray(actual, dtype=float).reshape(-1)
    if predicted.shape != actual.shape:
        raise ValidationError(f"{predicted.shape[0]} predictions for {actual.shape[0]} targets")
    if predicted.shape[0] == 0:
        raise ValidationError("cannot score an empty prediction")
    err = predicted - actual
    mse = float(np.mean(err ** 2))
    return MetricReport(mse, float(np.sqrt(mse)), float(np.mean(np.abs(err))))


def select_best_model(reports: Mapping[str, MetricReport]) -> str:
    """Kind with the lowest RMSE; ties go to MAE, then MSE, then to the
    order random forest, gbm, mlp."""
    if not reports:
        raise ValidationError("no metric reports to choose from")

    def order(kind: str):
        r = reports[kind]
        position = KINDS.index(kind) if kind in KINDS else len(KINDS)
        return (r.rmse, r.mae, r.mse, position, kind)

    return min(reports, key=order)
