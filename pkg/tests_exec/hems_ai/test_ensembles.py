"""Regression trees, random forests and gradient boosting.

Date:
    10.19.2026

"""


import inspect

import numpy as np
import pytest
from numpy.testing import assert_allclose

from hems.errors import DomainError, InsufficientDataError, ValidationError
from hems_ai import *
from hems_utils.config import ForecastConfig


def _dataset(rng, n=120, lags=4):
    demand = rng.uniform(0.5, 4.0, size=n)
    occupancy = np.clip(np.round(demand + rng.normal(0.0, 0.5, size=n)), 0, 4)
    return build_features(demand, lags, occupancy=occupancy)


def _smooth_dataset(rng, n=300):
    hours = np.arange(n) % 24
    occupancy = 2.0 + 1.5 * np.sin(2.0 * np.pi * hours / 24.0)
    demand = 0.6 * occupancy + rng.normal(0.0, 0.3, size=n) + 0.5
    targets = occupancy + rng.normal(0.0, 0.3, size=n)
    return build_features(demand, 6, occupancy=targets, hours=hours)


def test_max_features_rules():
    assert resolve_max_features("auto") is None
    assert resolve_max_features("sqrt") == "sqrt"
    assert resolve_max_features(3) == 3
    assert resolve_max_features(0.5) == 0.5
    with pytest.raises(DomainError):
        resolve_max_features("half")


def test_tree_is_well_formed(rng):
    data = _dataset(rng)
    tree = RegressionTree(max_depth=4).fit(data.X_train, data.y_train)
    assert tree.is_well_formed()
    assert tree.depth <= 4
    assert tree.n_leaves == (tree.node_count + 1) // 2


def test_single_tree_memorizes(rng):
    data = _dataset(rng)
    model = fit_random_forest(data, n_trees=1, bootstrap=False)
    assert_allclose(model.predict(data.X_train), data.y_train, atol=1e-12)


def test_forest_is_deterministic(rng):
    data = _dataset(rng)
    a = fit_random_forest(data, n_trees=10, max_features="sqrt", seed=3)
    b = fit_random_forest(data, n_trees=10, max_features="sqrt", seed=3)
    assert_allclose(a.predict(data.X_test), b.predict(data.X_test))


def test_forest_ignores_worker_count(rng):
    data = _dataset(rng)
    serial = fit_random_forest(data, n_trees=6, seed=5)
    parallel = fit_random_forest(data, n_trees=6, seed=5, n_jobs=2)
    assert_allclose(serial.predict(data.X_test), parallel.predict(data.X_test))


def test_forest_invariant_to_monotone_features(rng):
    data = _dataset(rng)
    cubed = SupervisedDataset(data.features ** 3, data.targets, data.train_idx,
                              data.test_idx, data.feature_names)
    a = fit_random_forest(data, n_trees=5, seed=2)
    b = fit_random_forest(cubed, n_trees=5, seed=2)
    assert_allclose(a.predict(data.X_train), b.predict(cubed.X_train))


def test_forest_beats_a_single_tree(rng):
    wins = 0
    for _ in range(10):
        data = _smooth_dataset(rng)
        tree = fit_random_forest(data, n_trees=1, bootstrap=False, seed=0)
        forest = fit_random_forest(data, n_trees=40, max_features="sqrt", seed=0)
        tree_rmse = evaluate_metrics(tree.predict(data.X_test), data.y_test).rmse
        forest_rmse = evaluate_metrics(forest.predict(data.X_test), data.y_test).rmse
        wins += forest_rmse <= tree_rmse
    assert wins >= 9


def test_forest_needs_training_rows():
    data = build_features([1.0, 2.0, 3.0], 2)
    with pytest.raises(InsufficientDataError):
        fit_random_forest(data, n_trees=1)
    with pytest.raises(ValidationError):
        fit_random_forest(build_features(np.arange(10.0), 2), n_trees=0)


def test_gbm_without_stages_predicts_mean(rng):
    data = _dataset(rng)
    model = fit_gbm(data, n_trees=0)
    assert_allclose(model.predict(data.X_test), np.full(data.X_test.shape[0], data.y_train.mean()))


def test_gbm_single_full_stage_memorizes(rng):
    data = _dataset(rng)
    model = fit_gbm(data, n_trees=1, learning_rate=1.0, num_leaves=None)
    assert np.mean((model.predict(data.X_train) - data.y_train) ** 2) < 1e-20


def test_gbm_training_loss_never_increases(rng):
    data = _dataset(rng)
    model = fit_gbm(data, n_trees=30, learning_rate=0.1, num_leaves=8)
    assert len(model.train_loss) == 31
    assert all(b <= a + 1e-12 for a, b in zip(model.train_loss, model.train_loss[1:]))
    staged = list(model.staged_predict(data.X_train))
    assert_allclose(staged[-1], model.predict(data.X_train))


def test_gbm_learning_rate_range(rng):
    data = _dataset(rng)
    for rate in (0.0, 1.5):
        with pytest.raises(ValidationError):
            fit_gbm(data, learning_rate=rate)


def test_default_ensemble_sizes():
    assert inspect.signature(fit_gbm).parameters["n_trees"].default == 400
    assert inspect.signature(fit_random_forest).parameters["n_trees"].default == 400
    assert ForecastConfig().gbm_trees == 400
