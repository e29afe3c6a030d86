"""Lagged-demand datasets.

Date:
    10.19.2026

"""


import numpy as np
import pytest
from numpy.testing import assert_allclose

from hems.errors import DomainError, InsufficientDataError
from hems_ai import *


def test_lag_rows():
    data = build_features([1.0, 2.0, 3.0, 4.0], 2)
    assert data.n_samples == 2
    assert data.n_features == 4
    assert_allclose(data.features[:, :2], [[2.0, 1.0], [3.0, 2.0]])
    assert_allclose(data.targets, [3.0, 4.0])
    assert data.feature_names[:2] == ("demand_lag1", "demand_lag2")


def test_lag_count_equal_to_history():
    with pytest.raises(InsufficientDataError):
        build_features([1.0, 2.0, 3.0], 3)


def test_constant_history_flags_lag_columns():
    data = build_features(np.full(40, 1.5), 3)
    assert data.zero_variance == ("demand_lag1", "demand_lag2", "demand_lag3")


def test_occupancy_targets_and_hours():
    demand = np.arange(30, dtype=float)
    occupancy = np.arange(30, dtype=float) % 5
    hours = (np.arange(30) + 6) % 24
    data = build_features(demand, 4, occupancy=occupancy, hours=hours)
    assert_allclose(data.targets, occupancy[4:])
    assert_allclose(data.hours, hours[4:])
    assert_allclose(data.features[:, -2:], hour_encoding(hours[4:]))


def test_chronological_split():
    data = build_features(np.arange(60, dtype=float), 10, test_fraction=0.2)
    assert data.test_idx.shape[0] == 10
    assert data.train_idx.max() < data.test_idx.min()
    assert data.X_train.shape == (40, 12)


def test_mismatched_lengths():
    with pytest.raises(DomainError):
        build_features(np.arange(20.0), 3, occupancy=np.arange(19.0))
