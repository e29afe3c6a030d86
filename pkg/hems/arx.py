"""Auto-regressive cooling-load model with exogenous inputs.

The AC load at hour h is predicted from lagged AC loads and three exogenous
inputs (outdoor temperature, occupancy, AC setpoint):

    p_h = sum_k [ -alpha_k * p_{h-k} + sum_m beta_{k,m} * x_{m,h-k+1} ]

Hours are 1-based. Values for hours before the horizon come from warm-up
arrays whose last element is hour 0.

Date:
    10.19.2026

"""


__all__ = [
    "EXOGENOUS_INPUTS",
    "ArxModel",
    "arx_predict",
    "arx_fit",
]


import logging
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence, Tuple

import numpy as np

from .errors import DomainError, InsufficientDataError, MissingHistoryError, RankDeficiencyError


logger = logging.getLogger(__name__)


EXOGENOUS_INPUTS = ("outdoor_temp", "occupancy", "setpoint")


@dataclass(frozen=True)
class ArxModel:
    """Coefficients of the ARX cooling-load model.

    Arguments:
        lag_set -- Ordered positive lags ``K``.
        alpha -- One coefficient per lag, shape ``(len(K),)``.
        beta -- One coefficient per lag and exogenous input, shape
            ``(len(K), 3)`` in the order of ``EXOGENOUS_INPUTS``.
    """

    lag_set: Tuple[int, ...]
    alpha: np.ndarray
    beta: np.ndarray

    def __post_init__(self) -> None:
        lags = tuple(int(k) for k in self.lag_set)
        if not lags or any(k < 1 for k in lags) or len(set(lags)) != len(lags):
            raise DomainError(f"lag set must hold distinct positive lags, got {lags}")
        alpha = np.array(self.alpha, dtype=float).reshape(-1)
        beta = np.array(self.beta, dtype=float).reshape(len(lags), -1)
        if alpha.shape[0] != len(lags):
            raise DomainError("one alpha per lag is required")
        if beta.shape[1] != len(EXOGENOUS_INPUTS):
            raise DomainError("one beta per (lag, exogenous input) pair is required")
        alpha.flags.writeable = False
        beta.flags.writeable = False
        object.__setattr__(self, "lag_set", lags)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)

    @property
    def max_lag(self) -> int:
        return max(self.lag_set)

    def beta_for(self, name: str) -> np.ndarray:
        """Coefficients of one exogenous input across lags."""
        return self.beta[:, EXOGENOUS_INPUTS.index(name)]

    @classmethod
    def from_coefficients(cls,
                          alpha: Sequence[float],
                          *,
                          outdoor_temp: Sequence[float] = None,
                          occupancy: Sequence[float] = None,
                          setpoint: Sequence[float] = None,
                          lag_set: Sequence[int] = (1,)) -> "ArxModel":
        n = len(tuple(lag_set))
        cols = []
        for coefs in (outdoor_temp, occupancy, setpoint):
            cols.append(np.zeros(n) if coefs is None else np.asarray(coefs, dtype=float))
        return cls(tuple(lag_set), np.asarray(alpha, dtype=float), np.column_stack(cols))


def _lookup(series, warmup, hour: int, what: str) -> float:
    if hour >= 1:
        if series is None or hour > len(series):
            raise MissingHistoryError(f"no {what} value for hour {hour}")
        return float(series[hour - 1])
    if warmup is None or len(warmup) == 0:
        raise MissingHistoryError(
            f"{what} lag reaches hour {hour} and no warm-up values were supplied"
        )
    idx = len(warmup) + hour - 1
    if idx < 0:
        raise MissingHistoryError(
            f"{what} lag reaches hour {hour}; only {len(warmup)} warm-up value(s)"
        )
    return float(warmup[idx])


def arx_predict(model: ArxModel,
                ac_history: Sequence[float],
                exog: Mapping[str, Sequence[float]],
                h: int,
                *,
                warmup: Optional[Sequence[float]] = None,
                exog_warmup: Optional[Mapping[str, Sequence[float]]] = None,
                clamp: bool = True) -> float:
    """Predict the AC load (kW) at hour ``h``.

    Arguments:
        model -- The ARX coefficients.
        ac_history -- AC loads for hours 1..h-1 (longer arrays are fine).
        exog -- Exogenous series keyed by ``EXOGENOUS_INPUTS``, hours 1..h.
        h -- The 1-based hour to predict.

    Keyword Arguments:
        warmup -- AC loads for hours <= 0, last element is hour 0.
        exog_warmup -- Exogenous values for hours <= 0, same convention.
        clamp -- Clamp the prediction at 0 kW.
    """
    exog_warmup = exog_warmup or {}
    value = 0.0
    for i, k in enumerate(model.lag_set):
        value -= model.alpha[i] * _lookup(ac_history, warmup, h - k, "AC load")
        for j, name in enumerate(EXOGENOUS_INPUTS):
            x = _lookup(exog.get(name), exog_warmup.get(name), h - k + 1, name)
            value += model.beta[i, j] * x
    if clamp:
        value = max(value, 0.0)
    return value


def _design_matrix(ac: np.ndarray, exog: Mapping[str, np.ndarray],
                   lag_set: Tuple[int, ...]):
    n = ac.shape[0]
    first = max(lag_set)
    rows = np.arange(first, n)
    cols, names = [], []
    for k in lag_set:
        cols.append(-ac[rows - k])
        names.append(f"ac_lag{k}")
    for k in lag_set:
        for name in EXOGENOUS_INPUTS:
            cols.append(exog[name][rows - k + 1])
            names.append(f"{name}_lag{k}")
    return np.column_stack(cols), ac[rows], names


def _collinear_columns(X: np.ndarray, names, tol: float) -> list:
    scale = np.maximum(1.0, np.abs(X).max(axis=0))
    flagged = [names[j] for j in np.flatnonzero(np.ptp(X, axis=0) <= tol * scale)]
    if flagged:
        return flagged
    _, s, vt = np.linalg.svd(X, full_matrices=False)
    null = vt[s <= tol * s[0]]
    involved = np.any(np.abs(null) > 1e-6, axis=0)
    return [names[j] for j in np.flatnonzero(involved)]


def arx_fit(ac_series: Sequence[float],
            exog: Mapping[str, Sequence[float]],
            lag_set: Sequence[int] = (1,)) -> ArxModel:
    """Ordinary least-squares estimate of the ARX coefficients.

    A regressor with zero variance is not identifiable and is reported as
    rank deficient together with any other collinear columns.
    """
    lag_set = tuple(int(k) for k in lag_set)
    ac = np.asarray(ac_series, dtype=float).reshape(-1)
    missing = [name for name in EXOGENOUS_INPUTS if name not in exog]
    if missing:
        raise DomainError(f"missing exogenous inputs: {', '.join(missing)}")
    ex = {name: np.asarray(exog[name], dtype=float).reshape(-1) for name in EXOGENOUS_INPUTS}
    for name, values in ex.items():
        if values.shape[0] != ac.shape[0]:
            raise DomainError(f"{name} has {values.shape[0]} values, AC series has {ac.shape[0]}")

    n_coef = len(lag_set) * (1 + len(EXOGENOUS_INPUTS))
    if ac.shape[0] < max(lag_set) + n_coef:
        raise InsufficientDataError(
            f"{ac.shape[0]} samples cannot identify {n_coef} coefficients with max lag {max(lag_set)}"
        )

    X, y, names = _design_matrix(ac, ex, lag_set)
    tol = 1e-10
    collinear = _collinear_columns(X, names, tol)
    if collinear:
        raise RankDeficiencyError(collinear)

    coef, *_ = np.linalg.lstsq(X, y, rcond=None)
    n_lags = len(lag_set)
    alpha = coef[:n_lags]
    beta = coef[n_lags:].reshape(n_lags, len(EXOGENOUS_INPUTS))
    rss = float(np.sum((y - X @ coef) ** 2))
    logger.info("arx_fit lags=%s samples=%d rss=%.6g", lag_set, y.shape[0], rss)
    return ArxModel(lag_set, alpha, beta)
