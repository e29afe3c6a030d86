"""Fitted forecast models.

Every model stores the per-feature min/max of its training rows and
predicts on features scaled with them.

Date:
    10.19.2026

"""


__all__ = [
    "KINDS",
    "ForecastModel",
    "RandomForestModel",
    "GbmModel",
    "feature_bounds",
]


from dataclasses import dataclass, field
from typing import ClassVar, List, Tuple

import numpy as np

from hems.errors import DomainError

from .trees import RegressionTree


KINDS = ("random_forest", "gbm", "mlp")


def feature_bounds(X: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    X = np.asarray(X, dtype=float)
    return X.min(axis=0), X.max(axis=0)


@dataclass
class ForecastModel:
    """Base class of the three regressors."""

    kind: ClassVar[str] = ""

    feature_min: np.ndarray
    feature_max: np.ndarray

    @property
    def n_features(self) -> int:
        return self.feature_min.shape[0]

    def scale(self, X: np.ndarray) -> np.ndarray:
        X = np.asarray(X, dtype=float)
        if X.ndim == 1:
            X = X.reshape(1, -1)
        if X.shape[1] != self.n_features:
            raise DomainError(f"model expects {self.n_features} features, got {X.shape[1]}")
        span = np.where(self.feature_max > self.feature_min,
                        self.feature_max - self.feature_min, 1.0)
        return (X - self.feature_min) / span

    def predict(self, X: np.ndarray) -> np.ndarray:
        return self._predict_scaled(self.scale(X))

    def _predict_scaled(self, X: np.ndarray) -> np.ndarray:
        raise NotImplementedError


@dataclass
class RandomForestModel(ForecastModel):
    kind: ClassVar[str] = "random_forest"

    trees: List[RegressionTree] = field(default_factory=list)

    def _predict_scaled(self, X: np.ndarray) -> np.ndarray:
        return np.mean([tree.predict(X) for tree in self.trees], axis=0)


@dataclass
class GbmModel(ForecastModel):
    """Base value plus learning-rate-weighted stage trees.

    ``train_loss[t]`` is the training mean squared error after ``t`` stages.
    """

    kind: ClassVar[str] = "gbm"

    base: float = 0.0
    learning_rate: float = 0.1
    trees: List[RegressionTree] = field(default_factory=list)
    train_loss: List[float] = field(default_factory=list)

    def staged_predict(self, X: np.ndarray):
        X = self.scale(X)
        pred = np.full(X.shape[0], self.base)
        yield pred.copy()
        for tree in self.trees:
            pred += self.learning_rate * tree.predict(X)
            yield pred.copy()

    def _predict_scaled(self, X: np.ndarray) -> np.ndarray:
        pred = np.full(X.shape[0], self.base)
        for tree in self.trees:
            pred += self.learning_rate * tree.predict(X)
        return pred
