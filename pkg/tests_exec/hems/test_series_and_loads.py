"""Horizon series, appliance and tariff types, and the load decomposition.

Date:
    10.19.2026

"""


import numpy as np
import pytest

from hems import *


def test_series_is_read_only():
    series = HorizonSeries([1.0, 2.0, 3.0], Unit.KW)
    assert series.horizon == 3
    with pytest.raises(ValueError):
        series.values[0] = 5.0


def test_series_rejects_bad_values():
    with pytest.raises(DomainError):
        HorizonSeries([1.0, -0.5], Unit.KW)
    with pytest.raises(DomainError):
        HorizonSeries([1.0, np.nan], Unit.CELSIUS)
    with pytest.raises(DomainError):
        HorizonSeries([1.0, 2.0], "kW", horizon=3)
    # temperatures and prices may be any finite value
    assert HorizonSeries([-2.0], Unit.CELSIUS).values[0] == -2.0


def test_series_replace_keeps_unit():
    series = HorizonSeries.constant(2.0, Unit.PERSONS, 4)
    other = series.replace([1, 2, 3, 4])
    assert other.unit is Unit.PERSONS
    assert list(other) == [1.0, 2.0, 3.0, 4.0]
    assert other != series


def test_appliance_defaults_and_errors():
    spec = ApplianceSpec("washer", 1.5, 2, 5, 10)
    assert spec.preferred_start == 5
    assert spec.latest_start == 9
    assert list(spec.starts()) == [5, 6, 7, 8, 9]
    with pytest.raises(DomainError):
        ApplianceSpec("washer", 1.5, 3, 5, 6)
    with pytest.raises(DomainError):
        ApplianceSpec("washer", -1.0, 1, 5, 6)
    with pytest.raises(DomainError):
        ApplianceSpec("washer", 1.0, 2, 5, 10, preferred_start=10)
    with pytest.raises(DomainError):
        spec.check_horizon(8)


def test_tariff_requires_positive_rates():
    with pytest.raises(DomainError):
        Tariff(HorizonSeries([0.1, 0.0], Unit.PRICE))
    with pytest.raises(DomainError):
        Tariff(HorizonSeries([0.1, 0.2], Unit.KW))


def test_decompose_load_examples():
    assert decompose_load(0.0, 0.0, 0.0, 0.0).demand == 0.0
    split = decompose_load(0.5, 1.0, 0.2, 1.3)
    assert split.demand == pytest.approx(3.0)
    assert split.internal == pytest.approx(1.7)
    assert split.demand - 1.3 == pytest.approx(split.internal)


def test_decompose_load_negative_input():
    with pytest.raises(DomainError):
        decompose_load(0.5, -1.0, 0.2, 1.3)
