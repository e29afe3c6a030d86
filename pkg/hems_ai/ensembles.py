"""Random forest and gradient-boosted trees for occupancy regression.

Bootstrap indices and per-tree seeds are drawn up front from one seeded
generator, so forests are identical whatever the number of workers.

Date:
    10.19.2026

"""


__all__ = [
    "fit_random_forest",
    "fit_gbm",
]


import logging
from typing import Optional

import numpy as np
from joblib import Parallel, delayed

from hems.errors import InsufficientDataError, ValidationError

from .features import SupervisedDataset
from .models import GbmModel, RandomForestModel, feature_bounds
from .trees import RegressionTree, resolve_max_features


logger = logging.getLogger(__name__)


_SEED_BOUND = 2 ** 31 - 1


def _training_rows(data: SupervisedDataset, minimum: int = 2):
    X, y = data.X_train, data.y_train
    if X.shape[0] < minimum:
        raise InsufficientDataError(f"{X.shape[0]} training rows, at least {minimum} needed")
    return X, y


def _fit_tree(X, y, params, seed) -> RegressionTree:
    return RegressionTree(seed=int(seed), **params).fit(X, y)


def fit_random_forest(data: SupervisedDataset,
                      n_trees: int = 400,
                      max_features="auto",
                      seed: int = 0,
                      *,
                      bootstrap: bool = True,
                      max_depth: Optional[int] = None,
                      min_samples_leaf: int = 1,
                      n_jobs: int = 1) -> RandomForestModel:
    """Mean of ``n_trees`` CART trees, each on a bootstrap resample with
    per-split feature subsampling."""
    if n_trees < 1:
        raise ValidationError(f"a forest needs at least one tree, got {n_trees}")
    resolve_max_features(max_features)
    X, y = _training_rows(data)
    lo, hi = feature_bounds(X)
    model = RandomForestModel(lo, hi)
    Xs = model.scale(X)

    rng = np.random.default_rng(seed)
    n = Xs.shape[0]
    samples = [rng.integers(0, n, size=n) if bootstrap else np.arange(n) for _ in range(n_trees)]
    seeds = rng.integers(0, _SEED_BOUND, size=n_trees)
    params = dict(max_depth=max_depth, min_samples_leaf=min_samples_leaf,
                  max_features=max_features)
    model.trees = Parallel(n_jobs=n_jobs)(
        delayed(_fit_tree)(Xs[idx], y[idx], params, s) for idx, s in zip(samples, seeds)
    )
    logger.info("random_forest trees=%d rows=%d max_features=%s", n_trees, n, max_features)
    return model


def fit_gbm(data: SupervisedDataset,
            n_trees: int = 400,
            learning_rate: float = 0.1,
            num_leaves: Optional[int] = 31,
            seed: int = 0,
            *,
            max_depth: Optional[int] = None,
            min_samples_leaf: int = 1) -> GbmModel:
    """Stagewise least-squares boosting of regression trees on residuals."""
    if not 0.0 < learning_rate <= 1.0:
        raise ValidationError(f"learning_rate must lie in (0, 1], got {learning_rate}")
    if n_trees < 0:
        raise ValidationError(f"n_trees must be non-negative, got {n_trees}")
    if num_leaves is not None and num_leaves < 2:
        raise ValidationError(f"num_leaves must be >= 2, got {num_leaves}")
    X, y = _training_rows(data)
    lo, hi = feature_bounds(X)
    Xs = (X - lo) / np.where(hi > lo, hi - lo, 1.0)

    base = float(y.mean())
    pred = np.full(y.shape[0], base)
    model = GbmModel(lo, hi, base=base, learning_rate=learning_rate)
    model.train_loss.append(float(np.mean((y - pred) ** 2)))
    for t in range(n_trees):
        tree = RegressionTree(max_depth=max_depth, min_samples_leaf=min_samples_leaf,
                              max_leaf_nodes=num_leaves, seed=seed + t)
        tree.fit(Xs, y - pred)
        pred = pred + learning_rate * tree.predict(Xs)
        model.trees.append(tree)
        model.train_loss.append(float(np.mean((y - pred) ** 2)))
    logger.info("gbm trees=%d lr=%g leaves=%s train_mse=%.6g",
                n_trees, learning_rate, num_leaves, model.train_loss[-1])
    return model
