"""Supervised datasets from hourly demand history.

Row ``t`` holds the ``lag_count`` previous demands (most recent first) and a
sine/cosine encoding of the hour of day; its target is the occupancy at
``t``. The train/test split is chronological.

Date:
    10.19.2026

"""


__all__ = [
    "DEFAULT_LAG_COUNT",
    "SupervisedDataset",
    "hour_encoding",
    "build_features",
]


import logging
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from hems.errors import DomainError, InsufficientDataError


logger = logging.getLogger(__name__)


DEFAULT_LAG_COUNT = 13


@dataclass(frozen=True)
class SupervisedDataset:
    """Feature matrix, targets and a chronological train/test partition.

    Arguments:
        features -- One row per sample.
        targets -- One target per row.
        train_idx -- Row indices used for fitting.
        test_idx -- Row indices held out, all later than the training rows.
        feature_names -- Column names.
        zero_variance -- Names of constant columns.
        hours -- Hour of day of every row.
    """

    features: np.ndarray
    targets: np.ndarray
    train_idx: np.ndarray
    test_idx: np.ndarray
    feature_names: Tuple[str, ...]
    zero_variance: Tuple[str, ...] = ()
    hours: Optional[np.ndarray] = None

    def __post_init__(self) -> None:
        if self.features.shape[0] != self.targets.shape[0]:
            raise DomainError(
                f"{self.features.shape[0]} feature rows for {self.targets.shape[0]} targets"
            )
        if np.intersect1d(self.train_idx, self.test_idx).size:
            raise DomainError("train and test partitions overlap")

    @property
    def n_samples(self) -> int:
        return self.features.shape[0]

    @property
    def n_features(self) -> int:
        return self.features.shape[1]

    @property
    def X_train(self) -> np.ndarray:
        return self.features[self.train_idx]

    @property
    def y_train(self) -> np.ndarray:
        return self.targets[self.train_idx]

    @property
    def X_test(self) -> np.ndarray:
        return self.features[self.test_idx]

    @property
    def y_test(self) -> np.ndarray:
        return self.targets[self.test_idx]


def hour_encoding(hours: np.ndarray) -> np.ndarray:
    angle = 2.0 * np.pi * np.asarray(hours, dtype=float) / 24.0
    return np.column_stack([np.sin(angle), np.cos(angle)])


def build_features(demand: Sequence[float],
                   lag_count: int = DEFAULT_LAG_COUNT,
                   *,
                   occupancy: Optional[Sequence[float]] = None,
                   hours: Optional[Sequence[int]] = None,
                   test_fraction: float = 0.2) -> SupervisedDataset:
    """Lagged-demand features with hour-of-day encodings.

    Arguments:
        demand -- Hourly demand history in kW.
        lag_count -- Number of lagged demands per row.

    Keyword Arguments:
        occupancy -- Occupancy at every hour of the history; the targets.
            Without it the targets are the demand itself.
        hours -- Hour of day at every hour of the history. Defaults to the
            position modulo 24.
        test_fraction -- Share of the latest rows held out for testing.
    """
    demand = np.asarray(demand, dtype=float).reshape(-1)
    n = demand.shape[0]
    if lag_count < 1:
        raise DomainError(f"lag_count must be positive, got {lag_count}")
    if n <= lag_count:
        raise InsufficientDataError(f"{n} hours of history cannot fill {lag_count} lags")
    if not 0.0 <= test_fraction < 1.0:
        raise DomainError(f"test_fraction must lie in [0, 1), got {test_fraction}")
    target_source = demand if occupancy is None else np.asarray(occupancy, dtype=float).reshape(-1)
    if target_source.shape[0] != n:
        raise DomainError(f"{target_source.shape[0]} occupancy values for {n} demand values")
    hours = np.arange(n) % 24 if hours is None else np.asarray(hours, dtype=int).reshape(-1)
    if hours.shape[0] != n:
        raise DomainError(f"{hours.shape[0]} hour labels for {n} demand values")

    rows = np.arange(lag_count, n)
    lags = np.column_stack([demand[rows - k] for k in range(1, lag_count + 1)])
    X = np.hstack([lags, hour_encoding(hours[rows])])
    names = tuple(f"demand_lag{k}" for k in range(1, lag_count + 1)) + ("hour_sin", "hour_cos")
    constant = tuple(names[j] for j in np.flatnonzero(np.ptp(X, axis=0) == 0.0))
    if constant:
        logger.warning("zero-variance feature columns: %s", ", ".join(constant))

    n_rows = rows.shape[0]
    n_test = int(round(n_rows * test_fraction)) if n_rows > 1 else 0
    n_test = min(n_test, n_rows - 1)
    idx = np.arange(n_rows)
    return SupervisedDataset(X, target_source[rows], idx[:n_rows - n_test], idx[n_rows - n_test:],
                             names, constant, hours[rows])
