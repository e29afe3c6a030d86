"""Error metrics and model selection.

Date:
    10.19.2026

"""


import math

import pytest

from hems.errors import ValidationError
from hems_ai import *


def test_perfect_prediction():
    assert evaluate_metrics([1.0, 2.0], [1.0, 2.0]) == MetricReport(0.0, 0.0, 0.0)


def test_unit_errors():
    assert evaluate_metrics([0.0, 0.0], [1.0, 1.0]) == MetricReport(1.0, 1.0, 1.0)


def test_hand_computed():
    report = evaluate_metrics([1.0, 4.0], [2.0, 2.0])
    assert report.mse == pytest.approx(2.5)
    assert report.rmse == pytest.approx(math.sqrt(2.5))
    assert report.mae == pytest.approx(1.5)
    assert report.rmse ** 2 == pytest.approx(report.mse, rel=1e-15)


def test_length_mismatch():
    with pytest.raises(ValidationError):
        evaluate_metrics([1.0], [1.0, 2.0])
    with pytest.raises(ValidationError):
        evaluate_metrics([], [])


def test_best_model_on_reference_errors():
    reports = {
        "random_forest": MetricReport(0.56307, 0.75038, 0.39525),
        "gbm": MetricReport(0.93923, 0.96914, 0.62905),
        "mlp": MetricReport(0.97357, 0.98645, 0.66541),
    }
    assert select_best_model(reports) == "random_forest"


def test_single_report():
    assert select_best_model({"mlp": MetricReport(1.0, 1.0, 1.0)}) == "mlp"


def test_ties_follow_kind_order():
    same = MetricReport(0.5, 0.5, 0.5)
    assert select_best_model({"mlp": same, "gbm": same}) == "gbm"
    assert select_best_model({"mlp": same, "gbm": same, "random_forest": same}) == "random_forest"


def test_no_reports():
    with pytest.raises(ValidationError):
        select_best_model({})
